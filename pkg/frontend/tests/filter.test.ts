import { describe, expect, it } from "vitest";

import {
  decodeFilter,
  emptyFilter,
  encodeFilter,
  isEmpty,
  toggleClass,
  toggleValue,
} from "../src/filter";

describe("filter selection", () => {
  it("starts empty and encodes to an empty query", () => {
    const filter = emptyFilter();
    expect(isEmpty(filter)).toBe(true);
    expect(encodeFilter(filter)).toBe("");
  });

  it("toggle adds then removes a value", () => {
    let filter = toggleValue(emptyFilter(), "pairs", "GP:EdD");
    expect(filter.pairs).toEqual(["GP:EdD"]);
    filter = toggleValue(filter, "pairs", "GP:EdD");
    expect(filter.pairs).toEqual([]);
    expect(isEmpty(filter)).toBe(true);
  });

  it("does not mutate the previous selection", () => {
    const before = emptyFilter();
    const after = toggleValue(before, "province", "K");
    expect(before.province).toEqual([]);
    expect(after.province).toEqual(["K"]);
  });

  it("class toggles between value and null", () => {
    let filter = toggleClass(emptyFilter(), "PERMANENT");
    expect(filter.clazz).toBe("PERMANENT");
    filter = toggleClass(filter, "FLEXIBLE");
    expect(filter.clazz).toBe("FLEXIBLE");
    filter = toggleClass(filter, "FLEXIBLE");
    expect(filter.clazz).toBeNull();
  });

  it("round-trips through the query grammar", () => {
    let filter = emptyFilter();
    filter = toggleValue(filter, "education", "GP");
    filter = toggleValue(filter, "education", "Go");
    filter = toggleValue(filter, "pairs", "GP:EdD");
    filter = toggleValue(filter, "province", "K");
    filter = toggleValue(filter, "city", "H610");
    filter = toggleClass(filter, "PERMANENT");
    const decoded = decodeFilter(encodeFilter(filter));
    expect(decoded).toEqual(filter);
  });

  it("encodes values sorted for stable URLs", () => {
    let filter = emptyFilter();
    filter = toggleValue(filter, "education", "Go");
    filter = toggleValue(filter, "education", "GP");
    expect(encodeFilter(filter)).toBe("education=GP&education=Go");
  });
});
