// The shared cross-view selection, mirroring the server's filter grammar:
// repeated keys are OR-sets within a dimension, `pairs` values are
// education:experience, `class` is a single employment class.

export interface FilterSelection {
  education: string[];
  experience: string[];
  pairs: string[]; // "GP:EdD"
  province: string[];
  city: string[];
  industry: string[];
  position: string[];
  clazz: string | null; // PERMANENT | FLEXIBLE
}

export type FilterDimension = Exclude<keyof FilterSelection, "clazz">;

const DIMENSIONS: FilterDimension[] = [
  "education",
  "experience",
  "pairs",
  "province",
  "city",
  "industry",
  "position",
];

export function emptyFilter(): FilterSelection {
  return {
    education: [],
    experience: [],
    pairs: [],
    province: [],
    city: [],
    industry: [],
    position: [],
    clazz: null,
  };
}

export function isEmpty(filter: FilterSelection): boolean {
  return DIMENSIONS.every((d) => filter[d].length === 0) && filter.clazz === null;
}

/** Toggle semantics: clicking a selected value deselects it. Returns a new
 * selection; the input is never mutated. */
export function toggleValue(
  filter: FilterSelection,
  dimension: FilterDimension,
  value: string,
): FilterSelection {
  const values = filter[dimension];
  const next = values.includes(value)
    ? values.filter((v) => v !== value)
    : [...values, value].sort();
  return { ...filter, [dimension]: next };
}

export function toggleClass(filter: FilterSelection, value: string): FilterSelection {
  return { ...filter, clazz: filter.clazz === value ? null : value };
}

/** Query string in the server's canonical key order; sorted values keep
 * encoded URLs stable and shareable. */
export function encodeFilter(filter: FilterSelection): string {
  const params = new URLSearchParams();
  for (const dimension of DIMENSIONS) {
    for (const value of [...filter[dimension]].sort()) {
      params.append(dimension, value);
    }
  }
  if (filter.clazz !== null) {
    params.append("class", filter.clazz);
  }
  return params.toString();
}

export function decodeFilter(query: string): FilterSelection {
  const params = new URLSearchParams(query);
  const filter = emptyFilter();
  for (const dimension of DIMENSIONS) {
    filter[dimension] = [...new Set(params.getAll(dimension))].sort();
  }
  filter.clazz = params.get("class");
  return filter;
}
