// Payload shapes served by the analytics API. These mirror the backend's
// JSON exactly; the client never aggregates, it only renders these
// numbers verbatim.

export interface Provenance {
  ingested: number;
  after_position_filter: number;
  after_outlier_removal: number;
}

export interface Summary {
  record_count: number;
  distinct_positions: number;
  distinct_companies: number;
  distinct_industries: number;
  distinct_provinces: number;
  distinct_cities: number;
  provenance: Provenance;
}

export interface Flow {
  education: string;
  experience: string;
  count: number;
}

export interface FlowMatrix {
  flows: Flow[];
  education_totals: Record<string, number>;
  experience_totals: Record<string, number>;
}

export interface RegionBar {
  province: string;
  record_count: number;
  avg_salary: number | null;
  salary_opacity: number;
  city_count: number;
}

export interface RegionBarSet {
  provinces: RegionBar[];
}

export interface RegionSalary {
  tier: "HIGH" | "MID" | "LOW";
  avg_salary: number;
}

export interface PositionRow {
  position: string;
  record_count: number;
  education_proportions: Record<string, number>;
  experience_proportions: Record<string, number>;
  region_salary: Record<string, RegionSalary>;
}

export interface PositionRowSet {
  positions: PositionRow[];
}

export interface GlyphAxis {
  dimension: string;
  positive: string[];
  negative: string[];
}

export interface GlyphSet {
  axis: GlyphAxis;
  permanent: {
    side: string[];
    jitter: number[];
    monthly_salary: number[];
    bonus_months: number[];
  };
  flexible: {
    side: string[];
    jitter: number[];
    wage_kind: string[];
    percentile_arc: number[];
  };
}

export interface PositionBlock {
  position: string;
  education_rank_min: number;
  education_rank_max: number;
  experience_rank_min: number;
  experience_rank_max: number;
  salary_min: number | null;
  salary_max: number | null;
  record_count: number;
}

export interface BandDistribution {
  blocks: PositionBlock[];
  education_bands: Record<string, number>;
  experience_bands: Record<string, number>;
}

export interface GridCell {
  industry: string;
  province: string;
  record_count: number;
  opacity: number;
}

export interface RankedGrid {
  industry_order: string[];
  province_order: string[];
  cells: GridCell[];
}

export interface Flower {
  industry: string;
  x: number;
  y: number;
  record_count: number;
  education_petal: number | null;
  experience_petal: number | null;
  salary_petal: number | null;
}

export interface FlowerSet {
  industries: Flower[];
}

export interface DonutShare {
  id: string;
  fraction: number;
}

export interface TreemapNode {
  region: string;
  posting_count: number;
  salary_opacity: number;
  inner_opacity: number;
  top_positions: DonutShare[];
  top_industries: DonutShare[];
  other_positions: number;
  other_industries: number;
  children: TreemapNode[];
}

/** One coherent frame: every payload fetched with the same filter. */
export interface ViewPayloads {
  summary: Summary;
  sankey: FlowMatrix;
  regions: RegionBarSet;
  positions: PositionRowSet;
  scatter: GlyphSet;
  bands: BandDistribution;
  grid: RankedGrid;
  flowers: FlowerSet;
  treemap: TreemapNode;
}

export const EDUCATION_ORDER = ["Gz", "GZ", "Gx", "Gy", "GI", "GP", "Go", "Gh"] as const;
export const EXPERIENCE_ORDER = ["EKk", "Eas", "Eqh", "EdD", "EaZ", "EzN", "Eby", "ESu"] as const;

// Petal palette: red = education, green = experience, blue = salary,
// gray = missing.
export const PETAL_COLORS = {
  education: "#c23b3b",
  experience: "#3f9e4d",
  salary: "#3b6fc2",
  missing: "#b0b0b0",
} as const;
