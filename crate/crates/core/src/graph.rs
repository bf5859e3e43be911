//! Weighted undirected graphs: validated construction, Laplacian assembly,
//! and a seeded random sensor-graph generator.

use ndarray::Array2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("invalid edge ({i}, {j}): {reason}")]
    InvalidEdge { i: usize, j: usize, reason: String },
    #[error("sensor graph generation failed: {0}")]
    GenerationFailure(String),
}

/// Connected weighted undirected graph.
///
/// Each edge is stored exactly once as `(i, j, w)` with `i < j` and `w > 0`.
/// Construction goes through [`build_graph`] or [`gen_sensor_graph`], both of
/// which enforce the invariants (no self-loops, no duplicates, connected).
#[derive(Debug, Clone, PartialEq)]
pub struct Graph<T: Scalar> {
    n: usize,
    edges: Vec<(usize, usize, T)>,
}

impl<T: Scalar> Graph<T> {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j, w)` triples with `i < j`.
    pub fn edges(&self) -> &[(usize, usize, T)] {
        &self.edges
    }

    /// Weighted degree of every vertex.
    pub fn degrees(&self) -> Vec<T> {
        let mut deg = vec![T::zero(); self.n];
        for &(i, j, w) in &self.edges {
            deg[i] = deg[i] + w;
            deg[j] = deg[j] + w;
        }
        deg
    }
}

/// Validate an edge list and build a connected [`Graph`].
///
/// Input edges may list endpoints in either order; they are canonicalized
/// to `i < j`.
pub fn build_graph<T: Scalar>(
    n: usize,
    edges: &[(usize, usize, T)],
) -> Result<Graph<T>, GraphError> {
    let mut canonical: Vec<(usize, usize, T)> = Vec::with_capacity(edges.len());
    for &(a, b, w) in edges {
        if a >= n || b >= n {
            return Err(GraphError::InvalidEdge {
                i: a,
                j: b,
                reason: format!("vertex id out of range (n = {n})"),
            });
        }
        if a == b {
            return Err(GraphError::InvalidEdge {
                i: a,
                j: b,
                reason: "self-loop".into(),
            });
        }
        if !(w > T::zero()) || !w.is_finite() {
            return Err(GraphError::InvalidEdge {
                i: a,
                j: b,
                reason: format!("weight must be finite and positive, got {w}"),
            });
        }
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        canonical.push((i, j, w));
    }
    canonical.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
    for pair in canonical.windows(2) {
        if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
            return Err(GraphError::InvalidEdge {
                i: pair[0].0,
                j: pair[0].1,
                reason: "duplicate edge".into(),
            });
        }
    }
    let g = Graph {
        n,
        edges: canonical,
    };
    if !is_connected(&g) {
        return Err(GraphError::DisconnectedGraph);
    }
    Ok(g)
}

/// Combinatorial Laplacian `L = D - W` as a dense symmetric matrix.
///
/// Row sums are exactly zero up to the cancellation of identically-ordered
/// floating-point sums.
pub fn laplacian<T: Scalar>(g: &Graph<T>) -> Array2<T> {
    let n = g.vertex_count();
    let mut l = Array2::zeros((n, n));
    for &(i, j, w) in g.edges() {
        l[[i, j]] = l[[i, j]] - w;
        l[[j, i]] = l[[j, i]] - w;
        l[[i, i]] = l[[i, i]] + w;
        l[[j, j]] = l[[j, j]] + w;
    }
    l
}

fn is_connected<T: Scalar>(g: &Graph<T>) -> bool {
    if g.n == 0 {
        return false;
    }
    component_labels(g.n, &g.edges).iter().all(|&c| c == 0)
}

/// Label vertices by connected component (labels are renumbered in order of
/// first appearance, so a connected graph is all-zero).
fn component_labels<T: Scalar>(n: usize, edges: &[(usize, usize, T)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(i, j, _) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        label[start] = next;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if label[u] == usize::MAX {
                    label[u] = next;
                    stack.push(u);
                }
            }
        }
        next += 1;
    }
    label
}

/// Generate a random geometric sensor graph.
///
/// Vertices are drawn uniformly in the unit square; pairs closer than a
/// cutoff get a Gaussian kernel weight `exp(-d^2 / (2 sigma^2))` with
/// `sigma` set to the mean distance to the 6th nearest neighbour. The
/// cutoff is tuned by bisection so the edge count lands within 10% of
/// `target_edges`; if the kernel graph is disconnected, the shortest
/// inter-component links are added. Deterministic for a fixed `seed`.
pub fn gen_sensor_graph<T: Scalar>(
    n: usize,
    target_edges: usize,
    seed: u64,
) -> Result<Graph<T>, GraphError> {
    if n < 2 {
        return Err(GraphError::GenerationFailure(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    let max_pairs = n * (n - 1) / 2;
    let lo_band = (0.9 * target_edges as f64).ceil() as usize;
    let hi_band = (1.1 * target_edges as f64).floor() as usize;
    if lo_band > max_pairs || target_edges == 0 {
        return Err(GraphError::GenerationFailure(format!(
            "target of {target_edges} edges unreachable with {n} vertices"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.gen::<f64>(), rng.gen::<f64>()))
        .collect();

    // Pairwise distances, kept in (i, j) order for reproducible scans.
    let mut dist = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = points[i].0 - points[j].0;
            let dy = points[i].1 - points[j].1;
            let d = (dx * dx + dy * dy).sqrt();
            dist[i][j] = d;
            dist[j][i] = d;
        }
    }

    // sigma: global mean of each vertex's distance to its k-th nearest
    // neighbour, k = min(6, n - 1).
    let k = 6.min(n - 1);
    let mut acc = 0.0;
    for i in 0..n {
        let mut row: Vec<f64> = (0..n).filter(|&j| j != i).map(|j| dist[i][j]).collect();
        row.sort_by(|a, b| a.partial_cmp(b).unwrap());
        acc += row[k - 1];
    }
    let sigma = (acc / n as f64).max(1e-12);

    let count_below = |cutoff: f64| -> usize {
        let mut c = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if dist[i][j] < cutoff {
                    c += 1;
                }
            }
        }
        c
    };
    let weight = |d: f64| -> T { T::cast((-d * d / (2.0 * sigma * sigma)).exp()) };

    let mut goal = target_edges;
    for _attempt in 0..8 {
        // Bisect the cutoff toward `goal` kernel edges.
        let mut lo = 0.0f64;
        let mut hi = std::f64::consts::SQRT_2 + 1e-9;
        let mut cutoff = hi;
        for _ in 0..64 {
            let mid = 0.5 * (lo + hi);
            if count_below(mid) < goal {
                lo = mid;
            } else {
                hi = mid;
                cutoff = mid;
            }
        }

        let mut edges: Vec<(usize, usize, T)> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if dist[i][j] < cutoff {
                    edges.push((i, j, weight(dist[i][j])));
                }
            }
        }

        // Stitch components with their mutually closest vertex pairs.
        loop {
            let labels = component_labels(n, &edges);
            if labels.iter().all(|&c| c == 0) {
                break;
            }
            let mut best: Option<(usize, usize, f64)> = None;
            for i in 0..n {
                for j in (i + 1)..n {
                    if labels[i] != labels[j]
                        && best.map_or(true, |(_, _, d)| dist[i][j] < d)
                    {
                        best = Some((i, j, dist[i][j]));
                    }
                }
            }
            let (i, j, d) = best.expect("disconnected graph has a crossing pair");
            edges.push((i, j, weight(d)));
        }

        if (lo_band..=hi_band).contains(&edges.len()) {
            return build_graph(n, &edges);
        }
        // Connectivity stitching overshot the band; aim lower and retry.
        let overshoot = edges.len().saturating_sub(target_edges);
        goal = goal.saturating_sub(overshoot.max(1));
        if goal == 0 {
            break;
        }
    }
    Err(GraphError::GenerationFailure(format!(
        "could not reach {target_edges} edges (within 10%) for n = {n}, seed = {seed}"
    )))
}
