//! Pointed polyhedral cones in coordinate space: homogeneous halfspace and
//! hyperplane constraints, extreme-ray enumeration via incremental double
//! description, and the pairwise-angle size metric used by the greedy
//! sampler.
//!
//! All normals and ray directions are unit vectors; feasibility and
//! activity use the shared tolerance [`FEAS_TOL`]. Rays are kept sorted
//! lexicographically by active set, which makes every derived quantity
//! deterministic.

pub mod oracle;

use ndarray::Array1;
use serde_json::json;
use thiserror::Error;

use crate::scalar::{dot, Scalar};

/// Feasibility / activity tolerance on unit-normalized data.
pub const FEAS_TOL: f64 = 1e-9;
/// Two unit rays closer than this in angle are the same ray.
pub const DEDUP_TOL: f64 = 1e-9;
/// Pivot threshold for rank decisions on unit normals.
const RANK_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum ConeError {
    #[error("operation requires a pointed cone")]
    NotPointedInput,
    #[error("operation requires at least two extreme rays")]
    TooFewRays,
    #[error("constraint normal is numerically zero")]
    DegenerateNormal,
    #[error("brute-force enumeration limits exceeded (dim {dim}, {constraints} constraints)")]
    OracleTooLarge { dim: usize, constraints: usize },
}

/// Constraint sense: `h^T x <= 0` or `h^T x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    Halfspace,
    Hyperplane,
}

/// One homogeneous constraint with a unit normal and the vertex id it
/// came from.
#[derive(Debug, Clone)]
pub struct Constraint<T: Scalar> {
    normal: Array1<T>,
    kind: ConstraintKind,
    label: usize,
}

impl<T: Scalar> Constraint<T> {
    fn new(normal: Array1<T>, kind: ConstraintKind, label: usize) -> Result<Self, ConeError> {
        let n = crate::scalar::norm(normal.as_slice().unwrap());
        if n <= T::cast(1e-12) {
            return Err(ConeError::DegenerateNormal);
        }
        Ok(Constraint {
            normal: normal.mapv(|v| v / n),
            kind,
            label,
        })
    }

    /// `h^T x <= 0` with `h` normalized to unit length.
    pub fn halfspace(normal: Array1<T>, label: usize) -> Result<Self, ConeError> {
        Self::new(normal, ConstraintKind::Halfspace, label)
    }

    /// `h^T x = 0` with `h` normalized to unit length.
    pub fn hyperplane(normal: Array1<T>, label: usize) -> Result<Self, ConeError> {
        Self::new(normal, ConstraintKind::Hyperplane, label)
    }

    pub fn normal(&self) -> &Array1<T> {
        &self.normal
    }

    pub fn kind(&self) -> ConstraintKind {
        self.kind
    }

    pub fn label(&self) -> usize {
        self.label
    }

    /// Signed violation of `x`: positive means infeasible.
    pub fn violation(&self, x: &Array1<T>) -> T {
        let v = dot(self.normal.as_slice().unwrap(), x.as_slice().unwrap());
        match self.kind {
            ConstraintKind::Halfspace => v,
            ConstraintKind::Hyperplane => v.abs(),
        }
    }
}

/// Extreme ray: a unit direction plus the indices of the constraints it
/// satisfies with equality.
#[derive(Debug, Clone)]
pub struct ExtremeRay<T: Scalar> {
    pub direction: Array1<T>,
    pub active_set: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeStatus {
    /// Full-rank constraint normals and at least one extreme ray.
    Pointed,
    /// The constraints admit a line; extreme rays are not enumerated.
    NotPointed,
    /// Only the origin is feasible.
    Trivial,
}

/// Polyhedral cone `{x : h_i^T x <= 0 (or = 0)}` with its extreme-ray
/// description when pointed.
#[derive(Debug, Clone)]
pub struct Cone<T: Scalar> {
    dim: usize,
    constraints: Vec<Constraint<T>>,
    rays: Vec<ExtremeRay<T>>,
    status: ConeStatus,
}

impl<T: Scalar> Cone<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn status(&self) -> ConeStatus {
        self.status
    }

    pub fn constraints(&self) -> &[Constraint<T>] {
        &self.constraints
    }

    pub fn rays(&self) -> &[ExtremeRay<T>] {
        &self.rays
    }

    /// Largest constraint violation of `x` (<= tol means feasible).
    pub fn max_violation(&self, x: &Array1<T>) -> T {
        self.constraints
            .iter()
            .map(|c| c.violation(x))
            .fold(T::neg_infinity(), T::max)
    }

    /// Diagnostic JSON dump of constraints and rays.
    pub fn to_debug_json(&self) -> serde_json::Value {
        let constraints: Vec<_> = self
            .constraints
            .iter()
            .map(|c| {
                json!({
                    "normal": c.normal.iter().map(|v| v.to_f64().unwrap()).collect::<Vec<_>>(),
                    "kind": match c.kind {
                        ConstraintKind::Halfspace => "halfspace",
                        ConstraintKind::Hyperplane => "hyperplane",
                    },
                    "label": c.label,
                })
            })
            .collect();
        let rays: Vec<_> = self
            .rays
            .iter()
            .map(|r| {
                json!({
                    "direction": r.direction.iter().map(|v| v.to_f64().unwrap()).collect::<Vec<_>>(),
                    "active_set": r.active_set,
                })
            })
            .collect();
        json!({
            "dim": self.dim,
            "status": match self.status {
                ConeStatus::Pointed => "pointed",
                ConeStatus::NotPointed => "not-pointed",
                ConeStatus::Trivial => "trivial",
            },
            "constraints": constraints,
            "rays": rays,
        })
    }
}

/// Build a cone from scratch.
///
/// The status is decided by a rank test on the constraint normals; extreme
/// rays are enumerated only for pointed cones (a simplicial start from a
/// full-rank subset of constraints, then incremental double-description
/// steps for the rest). Rays come out sorted lexicographically by active
/// set.
pub fn cone_from_constraints<T: Scalar>(
    dim: usize,
    constraints: Vec<Constraint<T>>,
) -> Cone<T> {
    for c in &constraints {
        assert_eq!(c.normal.len(), dim, "constraint normal has wrong dimension");
    }
    let normals: Vec<&Array1<T>> = constraints.iter().map(|c| &c.normal).collect();
    if rank_of(&normals, dim) < dim {
        return Cone {
            dim,
            constraints,
            rays: Vec::new(),
            status: ConeStatus::NotPointed,
        };
    }
    let rays = enumerate_rays(dim, &constraints);
    let status = if rays.is_empty() {
        ConeStatus::Trivial
    } else {
        ConeStatus::Pointed
    };
    Cone {
        dim,
        constraints,
        rays,
        status,
    }
}

/// Add one constraint to a pointed cone with an incremental
/// double-description step (both signs of the normal for a hyperplane).
///
/// A trivial cone stays trivial. Not-pointed input is rejected.
pub fn cone_add_constraint<T: Scalar>(
    cone: &Cone<T>,
    constraint: Constraint<T>,
) -> Result<Cone<T>, ConeError> {
    if cone.status == ConeStatus::NotPointed {
        return Err(ConeError::NotPointedInput);
    }
    assert_eq!(constraint.normal.len(), cone.dim);
    let mut constraints = cone.constraints.clone();
    let new_index = constraints.len();
    constraints.push(constraint);

    let mut rays = cone.rays.clone();
    if cone.status == ConeStatus::Trivial {
        rays.clear();
    } else {
        let c = &constraints[new_index];
        rays = dd_cut(cone.dim, &constraints, rays, &c.normal.clone(), new_index);
        if c.kind == ConstraintKind::Hyperplane && !rays.is_empty() {
            let flipped = c.normal.mapv(|v| -v);
            rays = dd_cut(cone.dim, &constraints, rays, &flipped, new_index);
        }
    }
    let rays = finalize_rays(rays, &constraints);
    let status = if rays.is_empty() {
        ConeStatus::Trivial
    } else {
        ConeStatus::Pointed
    };
    Ok(Cone {
        dim: cone.dim,
        constraints,
        rays,
        status,
    })
}

/// Size metric: the minimum pairwise inner product over distinct
/// normalized extreme rays. Fewer than two rays count as the smallest
/// possible region and score `+1`.
pub fn theta<T: Scalar>(cone: &Cone<T>) -> Result<T, ConeError> {
    if cone.status == ConeStatus::NotPointed {
        return Err(ConeError::NotPointedInput);
    }
    if cone.rays.len() < 2 {
        return Ok(T::one());
    }
    let mut best = T::one();
    for i in 0..cone.rays.len() {
        for j in (i + 1)..cone.rays.len() {
            let d = dot(
                cone.rays[i].direction.as_slice().unwrap(),
                cone.rays[j].direction.as_slice().unwrap(),
            );
            if d < best {
                best = d;
            }
        }
    }
    Ok(best)
}

/// The ray pair attaining [`theta`]; ties resolve to the pair that comes
/// first in the lexicographic (by active set) ray order.
pub fn widest_pair<T: Scalar>(
    cone: &Cone<T>,
) -> Result<(&ExtremeRay<T>, &ExtremeRay<T>), ConeError> {
    if cone.status == ConeStatus::NotPointed {
        return Err(ConeError::NotPointedInput);
    }
    if cone.rays.len() < 2 {
        return Err(ConeError::TooFewRays);
    }
    let mut best: Option<(usize, usize, T)> = None;
    for i in 0..cone.rays.len() {
        for j in (i + 1)..cone.rays.len() {
            let d = dot(
                cone.rays[i].direction.as_slice().unwrap(),
                cone.rays[j].direction.as_slice().unwrap(),
            );
            if best.map_or(true, |(_, _, b)| d < b) {
                best = Some((i, j, d));
            }
        }
    }
    let (i, j, _) = best.unwrap();
    Ok((&cone.rays[i], &cone.rays[j]))
}

/// Sum of the distances of the extreme rays to the hyperplane `h^T x = 0`
/// on each side: `(d_neg, d_pos)`. Rays within [`FEAS_TOL`] of the plane
/// contribute to neither side.
pub fn hyperplane_balance<T: Scalar>(
    cone: &Cone<T>,
    h: &Array1<T>,
) -> Result<(T, T), ConeError> {
    if cone.status == ConeStatus::NotPointed {
        return Err(ConeError::NotPointedInput);
    }
    let tol = T::cast(FEAS_TOL);
    let mut d_neg = T::zero();
    let mut d_pos = T::zero();
    for ray in &cone.rays {
        let v = dot(h.as_slice().unwrap(), ray.direction.as_slice().unwrap());
        if v < -tol {
            d_neg = d_neg + v.abs();
        } else if v > tol {
            d_pos = d_pos + v;
        }
    }
    Ok((d_neg, d_pos))
}

/// Does the hyperplane with normal `h` strictly separate the two rays?
pub fn separates<T: Scalar>(h: &Array1<T>, t1: &ExtremeRay<T>, t2: &ExtremeRay<T>) -> bool {
    let a = dot(h.as_slice().unwrap(), t1.direction.as_slice().unwrap());
    let b = dot(h.as_slice().unwrap(), t2.direction.as_slice().unwrap());
    a * b < T::zero()
}

// ---------------------------------------------------------------------------
// double-description internals

/// Enumerate extreme rays of a full-rank constraint system: simplicial
/// start from an independent subset, then one DD cut per remaining
/// halfspace.
fn enumerate_rays<T: Scalar>(dim: usize, constraints: &[Constraint<T>]) -> Vec<ExtremeRay<T>> {
    // Expand hyperplanes into their two halfspaces.
    let mut expanded: Vec<(usize, Array1<T>)> = Vec::new();
    for (idx, c) in constraints.iter().enumerate() {
        expanded.push((idx, c.normal.clone()));
        if c.kind == ConstraintKind::Hyperplane {
            expanded.push((idx, c.normal.mapv(|v| -v)));
        }
    }

    // Greedily select `dim` independent rows for the simplicial start.
    let picked = independent_subset(&expanded, dim);
    debug_assert_eq!(picked.len(), dim);
    let h_rows: Vec<Array1<T>> = picked.iter().map(|&i| expanded[i].1.clone()).collect();
    let Some(start) = simplicial_rays(&h_rows) else {
        return Vec::new();
    };
    let mut rays: Vec<ExtremeRay<T>> = start
        .into_iter()
        .map(|direction| ExtremeRay {
            direction,
            active_set: Vec::new(),
        })
        .collect();
    refresh_active_sets(&mut rays, constraints);

    for (pos, (idx, normal)) in expanded.iter().enumerate() {
        if picked.contains(&pos) {
            continue;
        }
        rays = dd_cut(dim, constraints, rays, normal, *idx);
        if rays.is_empty() {
            return Vec::new();
        }
    }
    finalize_rays(rays, constraints)
}

/// One double-description cut by the halfspace `h^T x <= 0` (original
/// constraint index `k`). Keeps the non-positive side, and for every
/// adjacent (negative, positive) ray pair emits the crossing ray
/// `(h^T z+) z- - (h^T z-) z+`.
fn dd_cut<T: Scalar>(
    dim: usize,
    constraints: &[Constraint<T>],
    mut rays: Vec<ExtremeRay<T>>,
    h: &Array1<T>,
    k: usize,
) -> Vec<ExtremeRay<T>> {
    refresh_active_sets(&mut rays, &constraints[..k.min(constraints.len())]);
    // Active sets must reflect all constraints already in the description,
    // including `k` itself when cutting the second side of a hyperplane.
    refresh_active_sets(&mut rays, constraints);

    let tol = T::cast(FEAS_TOL);
    let vals: Vec<T> = rays
        .iter()
        .map(|r| dot(h.as_slice().unwrap(), r.direction.as_slice().unwrap()))
        .collect();
    let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] < -tol).collect();
    let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] > tol).collect();

    if pos.is_empty() {
        return rays;
    }

    let mut out: Vec<ExtremeRay<T>> = Vec::new();
    for (i, ray) in rays.iter().enumerate() {
        if vals[i] <= tol {
            out.push(ray.clone());
        }
    }
    for &i in &neg {
        for &j in &pos {
            if !adjacent(dim, constraints, &rays[i], &rays[j]) {
                continue;
            }
            let wi = vals[j];
            let wj = -vals[i];
            let mut dir: Array1<T> = Array1::zeros(dim);
            for d in 0..dim {
                dir[d] = wi * rays[i].direction[d] + wj * rays[j].direction[d];
            }
            let n = crate::scalar::norm(dir.as_slice().unwrap());
            if n <= T::cast(1e-15) {
                continue;
            }
            let dir = dir.mapv(|v| v / n);
            if out.iter().any(|r| {
                dot(r.direction.as_slice().unwrap(), dir.as_slice().unwrap())
                    >= T::one() - T::cast(DEDUP_TOL)
            }) {
                continue;
            }
            out.push(ExtremeRay {
                direction: dir,
                active_set: Vec::new(),
            });
        }
    }
    refresh_active_sets(&mut out, constraints);
    out
}

/// Two rays are adjacent when their shared active constraints have rank
/// exactly `dim - 2` (a rank test rather than a cardinality test, so
/// degenerate positions are handled).
fn adjacent<T: Scalar>(
    dim: usize,
    constraints: &[Constraint<T>],
    a: &ExtremeRay<T>,
    b: &ExtremeRay<T>,
) -> bool {
    if dim < 2 {
        return false;
    }
    let shared: Vec<&Array1<T>> = a
        .active_set
        .iter()
        .filter(|i| b.active_set.binary_search(i).is_ok())
        .map(|&i| &constraints[i].normal)
        .collect();
    rank_of(&shared, dim) == dim - 2
}

/// Recompute every ray's active set against the given constraints.
fn refresh_active_sets<T: Scalar>(rays: &mut [ExtremeRay<T>], constraints: &[Constraint<T>]) {
    let tol = T::cast(FEAS_TOL);
    for ray in rays {
        ray.active_set = constraints
            .iter()
            .enumerate()
            .filter(|(_, c)| {
                dot(
                    c.normal.as_slice().unwrap(),
                    ray.direction.as_slice().unwrap(),
                )
                .abs()
                    <= tol
            })
            .map(|(i, _)| i)
            .collect();
    }
}

/// Feasibility scrub, dedup by direction, final active sets, and the
/// deterministic lexicographic-by-active-set ordering.
fn finalize_rays<T: Scalar>(
    mut rays: Vec<ExtremeRay<T>>,
    constraints: &[Constraint<T>],
) -> Vec<ExtremeRay<T>> {
    let tol = T::cast(FEAS_TOL);
    rays.retain(|r| {
        constraints
            .iter()
            .all(|c| c.violation(&r.direction) <= tol)
    });
    let mut kept: Vec<ExtremeRay<T>> = Vec::with_capacity(rays.len());
    for ray in rays {
        let dup = kept.iter().any(|r| {
            dot(
                r.direction.as_slice().unwrap(),
                ray.direction.as_slice().unwrap(),
            ) >= T::one() - T::cast(DEDUP_TOL)
        });
        if !dup {
            kept.push(ray);
        }
    }
    refresh_active_sets(&mut kept, constraints);
    kept.sort_by(|a, b| a.active_set.cmp(&b.active_set));
    kept
}

/// Greedy selection of `dim` linearly independent rows (indices into
/// `expanded`) by thresholded Gram-Schmidt.
fn independent_subset<T: Scalar>(expanded: &[(usize, Array1<T>)], dim: usize) -> Vec<usize> {
    let mut basis: Vec<Array1<T>> = Vec::new();
    let mut picked = Vec::new();
    for (pos, (_, row)) in expanded.iter().enumerate() {
        if picked.len() == dim {
            break;
        }
        let mut residual = row.clone();
        for b in &basis {
            let proj = dot(b.as_slice().unwrap(), residual.as_slice().unwrap());
            for d in 0..dim {
                residual[d] = residual[d] - proj * b[d];
            }
        }
        let n = crate::scalar::norm(residual.as_slice().unwrap());
        if n > T::cast(RANK_TOL) {
            basis.push(residual.mapv(|v| v / n));
            picked.push(pos);
        }
    }
    picked
}

/// Rays of the simplicial cone `{x : H x <= 0}` with invertible `H`: the
/// normalized columns of `-H^{-1}`.
fn simplicial_rays<T: Scalar>(h_rows: &[Array1<T>]) -> Option<Vec<Array1<T>>> {
    let dim = h_rows.len();
    // Gauss-Jordan inversion of H (rows stacked).
    let mut a = vec![vec![T::zero(); 2 * dim]; dim];
    for (r, row) in h_rows.iter().enumerate() {
        for c in 0..dim {
            a[r][c] = row[c];
        }
        a[r][dim + r] = T::one();
    }
    for col in 0..dim {
        let mut piv = col;
        for r in col..dim {
            if a[r][col].abs() > a[piv][col].abs() {
                piv = r;
            }
        }
        if a[piv][col].abs() <= T::cast(1e-14) {
            return None;
        }
        a.swap(col, piv);
        let p = a[col][col];
        for c in 0..2 * dim {
            a[col][c] = a[col][c] / p;
        }
        for r in 0..dim {
            if r == col {
                continue;
            }
            let f = a[r][col];
            if f.abs() > T::zero() {
                for c in 0..2 * dim {
                    a[r][c] = a[r][c] - f * a[col][c];
                }
            }
        }
    }
    let mut rays = Vec::with_capacity(dim);
    for c in 0..dim {
        let mut dir: Array1<T> = Array1::zeros(dim);
        for r in 0..dim {
            dir[r] = -a[r][dim + c];
        }
        let n = crate::scalar::norm(dir.as_slice().unwrap());
        if n <= T::cast(1e-15) {
            return None;
        }
        rays.push(dir.mapv(|v| v / n));
    }
    Some(rays)
}

/// Numerical rank of a set of row vectors (Gaussian elimination with
/// partial pivoting, pivots above [`RANK_TOL`]).
fn rank_of<T: Scalar>(rows: &[&Array1<T>], dim: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut a: Vec<Vec<T>> = rows.iter().map(|r| r.to_vec()).collect();
    let m = a.len();
    let mut rank = 0;
    for col in 0..dim {
        let mut piv = rank;
        let mut best = T::zero();
        for (r, row) in a.iter().enumerate().take(m).skip(rank) {
            if row[col].abs() > best {
                best = row[col].abs();
                piv = r;
            }
        }
        if best <= T::cast(RANK_TOL) {
            continue;
        }
        a.swap(rank, piv);
        for r in (rank + 1)..m {
            let f = a[r][col] / a[rank][col];
            if f.abs() > T::zero() {
                for c in col..dim {
                    a[r][c] = a[r][c] - f * a[rank][c];
                }
            }
        }
        rank += 1;
        if rank == m || rank == dim {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn hs(v: Vec<f64>, label: usize) -> Constraint<f64> {
        Constraint::halfspace(Array1::from(v), label).unwrap()
    }

    fn ray_dirs(c: &Cone<f64>) -> Vec<Vec<f64>> {
        c.rays().iter().map(|r| r.direction.to_vec()).collect()
    }

    fn has_direction(c: &Cone<f64>, dir: &[f64], tol: f64) -> bool {
        let n: f64 = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
        c.rays().iter().any(|r| {
            let d: f64 = r
                .direction
                .iter()
                .zip(dir)
                .map(|(a, b)| a * b / n)
                .sum();
            d >= 1.0 - tol
        })
    }

    #[test]
    fn negative_orthant() {
        let cone = cone_from_constraints(
            3,
            vec![
                hs(vec![1.0, 0.0, 0.0], 0),
                hs(vec![0.0, 1.0, 0.0], 1),
                hs(vec![0.0, 0.0, 1.0], 2),
            ],
        );
        assert_eq!(cone.status(), ConeStatus::Pointed);
        assert_eq!(cone.rays().len(), 3);
        for k in 0..3 {
            let mut dir = [0.0; 3];
            dir[k] = -1.0;
            assert!(has_direction(&cone, &dir, 1e-12));
        }
        assert!((theta(&cone).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn single_halfspace_is_not_pointed() {
        let cone = cone_from_constraints(2, vec![hs(vec![1.0, 0.0], 0)]);
        assert_eq!(cone.status(), ConeStatus::NotPointed);
        assert!(cone.rays().is_empty());
        assert!(matches!(theta(&cone), Err(ConeError::NotPointedInput)));
    }

    #[test]
    fn two_halfspace_wedge_matches_oracle() {
        let r = 1.0 / 2.0f64.sqrt();
        let constraints = vec![hs(vec![1.0, 0.0], 0), hs(vec![-r, r], 1)];
        let cone = cone_from_constraints(2, constraints.clone());
        assert_eq!(cone.status(), ConeStatus::Pointed);
        assert_eq!(cone.rays().len(), 2);
        assert!(has_direction(&cone, &[0.0, -1.0], 1e-9));
        assert!(has_direction(&cone, &[-r, -r], 1e-9));

        let oracle = oracle::brute_force_rays(2, &constraints).unwrap();
        assert_eq!(oracle.len(), 2);

        // theta: dot of the two rays = 1/sqrt(2).
        let t = theta(&cone).unwrap();
        assert!((t - r).abs() < 1e-9, "theta = {t}");

        // Only one pair, returned in stored (active-set lexicographic) order.
        let (a, b) = widest_pair(&cone).unwrap();
        assert!(a.active_set < b.active_set);
    }

    #[test]
    fn redundant_constraint_keeps_rays() {
        let base = cone_from_constraints(
            3,
            vec![
                hs(vec![1.0, 0.0, 0.0], 0),
                hs(vec![0.0, 1.0, 0.0], 1),
                hs(vec![0.0, 0.0, 1.0], 2),
            ],
        );
        let s = 1.0 / 3.0f64.sqrt();
        let grown = cone_add_constraint(&base, hs(vec![s, s, s], 3)).unwrap();
        assert_eq!(ray_dirs(&base), ray_dirs(&grown));
    }

    #[test]
    fn orthant_cut_produces_crossing_ray() {
        let base = cone_from_constraints(
            3,
            vec![
                hs(vec![1.0, 0.0, 0.0], 0),
                hs(vec![0.0, 1.0, 0.0], 1),
                hs(vec![0.0, 0.0, 1.0], 2),
            ],
        );
        let r = 1.0 / 2.0f64.sqrt();
        let cut = cone_add_constraint(&base, hs(vec![-r, r, 0.0], 3)).unwrap();
        assert_eq!(cut.status(), ConeStatus::Pointed);
        assert_eq!(cut.rays().len(), 3);
        assert!(has_direction(&cut, &[0.0, -1.0, 0.0], 1e-9));
        assert!(has_direction(&cut, &[0.0, 0.0, -1.0], 1e-9));
        assert!(has_direction(&cut, &[-r, -r, 0.0], 1e-9));

        // Cross-check against the brute-force oracle.
        let oracle = oracle::brute_force_rays(3, cut.constraints()).unwrap();
        assert_eq!(oracle.len(), cut.rays().len());
    }

    #[test]
    fn trivial_cone_from_opposing_pairs() {
        let cone = cone_from_constraints(
            2,
            vec![
                hs(vec![1.0, 0.0], 0),
                hs(vec![-1.0, 0.0], 1),
                hs(vec![0.0, 1.0], 2),
                hs(vec![0.0, -1.0], 3),
            ],
        );
        assert_eq!(cone.status(), ConeStatus::Trivial);
        assert!(cone.rays().is_empty());
        assert_eq!(theta(&cone).unwrap(), 1.0);
    }

    #[test]
    fn hyperplane_constraint_restricts_to_plane() {
        // x3 = 0, x1 <= 0, x2 <= 0 -> rays -e1, -e2.
        let cone = cone_from_constraints(
            3,
            vec![
                Constraint::hyperplane(array![0.0, 0.0, 1.0], 0).unwrap(),
                hs(vec![1.0, 0.0, 0.0], 1),
                hs(vec![0.0, 1.0, 0.0], 2),
            ],
        );
        assert_eq!(cone.status(), ConeStatus::Pointed);
        assert_eq!(cone.rays().len(), 2);
        assert!(has_direction(&cone, &[-1.0, 0.0, 0.0], 1e-9));
        assert!(has_direction(&cone, &[0.0, -1.0, 0.0], 1e-9));
        // Every ray lies on the hyperplane, so constraint 0 is always active.
        for ray in cone.rays() {
            assert!(ray.active_set.contains(&0));
        }
    }

    #[test]
    fn widest_pair_on_orthant_uses_lexicographic_tie_break() {
        let cone = cone_from_constraints(
            3,
            vec![
                hs(vec![1.0, 0.0, 0.0], 0),
                hs(vec![0.0, 1.0, 0.0], 1),
                hs(vec![0.0, 0.0, 1.0], 2),
            ],
        );
        // All three pairs tie at cosine 0; the winner is the first pair in
        // the lexicographic ray order, i.e. active sets {0,1} and {0,2}.
        let (a, b) = widest_pair(&cone).unwrap();
        assert_eq!(a.active_set, vec![0, 1]);
        assert_eq!(b.active_set, vec![0, 2]);
    }

    #[test]
    fn single_ray_cone_theta_is_one() {
        // x2 = 0 and x1 <= 0 in R^2: one ray (-1, 0).
        let cone = cone_from_constraints(
            2,
            vec![
                Constraint::hyperplane(array![0.0, 1.0], 0).unwrap(),
                hs(vec![1.0, 0.0], 1),
            ],
        );
        assert_eq!(cone.rays().len(), 1);
        assert_eq!(theta(&cone).unwrap(), 1.0);
        assert!(matches!(widest_pair(&cone), Err(ConeError::TooFewRays)));
    }

    #[test]
    fn balance_on_symmetric_wedge() {
        let cone = cone_from_constraints(2, vec![hs(vec![1.0, 0.0], 0), hs(vec![0.0, 1.0], 1)]);
        let r = 1.0 / 2.0f64.sqrt();
        let h = array![r, -r];
        let (d_neg, d_pos) = hyperplane_balance(&cone, &h).unwrap();
        assert!((d_neg - r).abs() < 1e-12);
        assert!((d_pos - r).abs() < 1e-12);
        let (t1, t2) = widest_pair(&cone).unwrap();
        assert!(separates(&h, t1, t2));
    }

    #[test]
    fn balance_ignores_on_plane_rays_and_detects_one_sided() {
        let cone = cone_from_constraints(2, vec![hs(vec![1.0, 0.0], 0), hs(vec![0.0, 1.0], 1)]);
        // h aligned with constraint 0: ray (0,-1) lies on the plane, ray
        // (-1,0) is strictly negative.
        let h = array![1.0, 0.0];
        let (d_neg, d_pos) = hyperplane_balance(&cone, &h).unwrap();
        assert!((d_neg - 1.0).abs() < 1e-12);
        assert_eq!(d_pos, 0.0);
        let (t1, t2) = widest_pair(&cone).unwrap();
        assert!(!separates(&h, t1, t2));
    }

    #[test]
    fn add_constraint_rejects_not_pointed() {
        let cone = cone_from_constraints(2, vec![hs(vec![1.0, 0.0], 0)]);
        let err = cone_add_constraint(&cone, hs(vec![0.0, 1.0], 1)).unwrap_err();
        assert!(matches!(err, ConeError::NotPointedInput));
    }

    #[test]
    fn zero_normal_is_rejected() {
        assert!(matches!(
            Constraint::halfspace(array![0.0, 0.0], 0),
            Err(ConeError::DegenerateNormal)
        ));
    }

    #[test]
    fn incremental_matches_from_scratch_on_wedge_sequence() {
        let r = 1.0 / 2.0f64.sqrt();
        let all = vec![
            hs(vec![1.0, 0.0, 0.0], 0),
            hs(vec![0.0, 1.0, 0.0], 1),
            hs(vec![0.0, 0.0, 1.0], 2),
            hs(vec![-r, r, 0.0], 3),
            hs(vec![0.0, -r, r], 4),
        ];
        let scratch = cone_from_constraints(3, all.clone());
        let mut inc = cone_from_constraints(3, all[..3].to_vec());
        for c in &all[3..] {
            inc = cone_add_constraint(&inc, c.clone()).unwrap();
        }
        assert_eq!(scratch.rays().len(), inc.rays().len());
        for (a, b) in scratch.rays().iter().zip(inc.rays()) {
            assert_eq!(a.active_set, b.active_set);
            let d: f64 = a
                .direction
                .iter()
                .zip(b.direction.iter())
                .map(|(x, y)| x * y)
                .sum();
            assert!(d >= 1.0 - 1e-9);
        }
    }
}
