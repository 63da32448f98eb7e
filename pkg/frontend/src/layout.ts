/** Seeded force-directed layout (Fruchterman-Reingold flavor) for the
 * macro map.
 *
 * Layout is presentation only; determinism is per session (one seed
 * drawn at startup), so re-rendering the same data stays stable while
 * different sessions may land in different but equally valid
 * arrangements.
 */

export interface LayoutEdge {
  a: number;
  b: number;
  weight: number;
}

/** mulberry32: tiny deterministic PRNG. */
export function seededRandom(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  ids: number[],
  edges: LayoutEdge[],
  width: number,
  height: number,
  seed: number,
  iterations = 250,
): Map<number, { x: number; y: number }> {
  const random = seededRandom(seed);
  const n = Math.max(1, ids.length);
  const positions = ids.map(() => ({
    x: width * (0.2 + 0.6 * random()),
    y: height * (0.2 + 0.6 * random()),
  }));
  const index = new Map(ids.map((id, i) => [id, i]));
  const k = 0.8 * Math.sqrt((width * height) / n); // ideal pair distance
  const startTemperature = Math.min(width, height) / 6;

  for (let step = 0; step < iterations; step++) {
    const temperature = startTemperature * (1 - step / iterations) + 0.5;
    const dx = new Array<number>(n).fill(0);
    const dy = new Array<number>(n).fill(0);

    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let vx = positions[i].x - positions[j].x;
        let vy = positions[i].y - positions[j].y;
        let d = Math.hypot(vx, vy);
        if (d < 1e-6) {
          // coincident nodes: push apart along a seeded direction
          vx = random() - 0.5;
          vy = random() - 0.5;
          d = Math.hypot(vx, vy);
        }
        const repulsion = (k * k) / d;
        dx[i] += (vx / d) * repulsion;
        dy[i] += (vy / d) * repulsion;
        dx[j] -= (vx / d) * repulsion;
        dy[j] -= (vy / d) * repulsion;
      }
    }
    for (const edge of edges) {
      const i = index.get(edge.a);
      const j = index.get(edge.b);
      if (i === undefined || j === undefined) continue;
      const vx = positions[i].x - positions[j].x;
      const vy = positions[i].y - positions[j].y;
      const d = Math.max(1e-6, Math.hypot(vx, vy));
      const attraction = (d * d) / k * Math.min(2, 0.5 + edge.weight / 2);
      dx[i] -= (vx / d) * attraction;
      dy[i] -= (vy / d) * attraction;
      dx[j] += (vx / d) * attraction;
      dy[j] += (vy / d) * attraction;
    }
    for (let i = 0; i < n; i++) {
      // light gravity keeps disconnected components on canvas
      dx[i] += (width / 2 - positions[i].x) * 0.03;
      dy[i] += (height / 2 - positions[i].y) * 0.03;
      const d = Math.max(1e-6, Math.hypot(dx[i], dy[i]));
      const capped = Math.min(d, temperature);
      positions[i].x += (dx[i] / d) * capped;
      positions[i].y += (dy[i] / d) * capped;
      positions[i].x = Math.max(20, Math.min(width - 20, positions[i].x));
      positions[i].y = Math.max(20, Math.min(height - 20, positions[i].y));
    }
  }
  return new Map(ids.map((id, i) => [id, { x: positions[i].x, y: positions[i].y }]));
}
