/** JSON payload shapes served by the query service. */

export interface NeighborEntry {
  label: string;
  value: number;
}

export interface NeighborsPayload {
  term: string;
  alpha: number;
  s: number;
  window: [number, number];
  neighbors: NeighborEntry[];
  dual_alpha: number;
}

export interface FieldMember {
  label: string;
  i_s: number;
  i_g: number;
  intra_weight: number;
  growth: number | null;
}

export interface FieldPayload {
  id: number;
  window: [number, number];
  alpha: number;
  members: FieldMember[];
  label_generic: string;
  label_specific: string;
}

export interface FieldsPayload {
  window: [number, number];
  alpha: number;
  threshold: number;
  k: number;
  edge_rule: string;
  fields: FieldPayload[];
}

export interface MapNode {
  field_id: number;
  size_raw: number;
  size_display: number;
  activity: number | null;
  activity_excluded: number;
  label: string;
  n_terms: number;
}

export interface MapEdge {
  field_a: number;
  field_b: number;
  weight: number;
}

export interface MapPayload {
  window: [number, number];
  filter: [number, number];
  nodes: MapNode[];
  edges: MapEdge[];
}

export interface TermEntry {
  label: string;
  total_occurrences: number;
}

export interface TermsPayload {
  terms: TermEntry[];
}
