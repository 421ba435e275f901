//! Weighted lattice paths with up steps `U = (1, 1)`, horizontal steps
//! `H = (1, 0)` and down steps `D = (m - 1, -1)`, used as independent oracles
//! for sequence terms and small Hankel determinants.
//!
//! `U` weighs 1, `H` at height `k` weighs `s(k)` and a `D` ending at height
//! `k` weighs `t(k)`.

use thiserror::Error;

use crate::arith::Scalar;
use crate::sequences::{Family, SequenceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path system of size {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Step widths and height-dependent weights. Height `k` reads entry
/// `min(|k|, len - 1)` of each weight list, so a single entry is a constant
/// weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathModel {
    pub m: u32,
    pub s: Vec<Scalar>,
    pub t: Vec<Scalar>,
    /// Paths may not go below the axis.
    pub non_negative: bool,
}

impl PathModel {
    pub fn new(m: u32, s: Vec<Scalar>, t: Vec<Scalar>, non_negative: bool) -> Self {
        assert!(m >= 1, "m must be positive");
        assert!(!s.is_empty() && !t.is_empty(), "weights need at least one entry");
        PathModel { m, s, t, non_negative }
    }

    /// The model whose path weights are the terms of `spec`.
    pub fn for_spec(spec: &SequenceSpec) -> Self {
        let (a, b) = (spec.a.clone(), spec.b.clone());
        match spec.family {
            Family::Restricted => PathModel::new(spec.m, vec![a], vec![b], true),
            Family::Shifted => PathModel::new(spec.m, vec![&a + &spec.t, a], vec![b], true),
            Family::Unrestricted => PathModel::new(spec.m, vec![a], vec![b], false),
        }
    }

    fn s_at(&self, h: i64) -> &Scalar {
        &self.s[(h.unsigned_abs() as usize).min(self.s.len() - 1)]
    }

    fn t_at(&self, h: i64) -> &Scalar {
        &self.t[(h.unsigned_abs() as usize).min(self.t.len() - 1)]
    }
}

/// Total weight of the paths from `(0, 0)` to `(n, 0)`, by dynamic
/// programming over `(x, height)`.
pub fn path_weight_dp(model: &PathModel, n: usize) -> Scalar {
    let w = (model.m as usize).saturating_sub(1);
    // No path of x-length n rises above height n.
    let top = n as i64;
    let bottom = if model.non_negative { 0 } else { -top };
    let rows = (top - bottom + 1) as usize;
    let idx = |h: i64| (h - bottom) as usize;
    let mut grid = vec![vec![Scalar::zero(); rows]; n + 1];
    grid[0][idx(0)] = Scalar::one();
    for x in 0..=n {
        if w == 0 {
            // Vertical down steps stay in this column; cascade from the top.
            for h in ((bottom + 1)..=top).rev() {
                let v = grid[x][idx(h)].clone();
                if !v.is_zero() {
                    let add = &v * model.t_at(h - 1);
                    grid[x][idx(h - 1)] = &grid[x][idx(h - 1)] + &add;
                }
            }
        }
        for h in bottom..=top {
            let v = grid[x][idx(h)].clone();
            if v.is_zero() {
                continue;
            }
            if x < n {
                if h < top {
                    grid[x + 1][idx(h + 1)] = &grid[x + 1][idx(h + 1)] + &v;
                }
                let hs = &v * model.s_at(h);
                grid[x + 1][idx(h)] = &grid[x + 1][idx(h)] + &hs;
            }
            if w > 0 && x + w <= n && h > bottom {
                let d = &v * model.t_at(h - 1);
                grid[x + w][idx(h - 1)] = &grid[x + w][idx(h - 1)] + &d;
            }
        }
    }
    grid[n][idx(0)].clone()
}

/// `n` paths from `A_i = (-i, 0)` to `E_j = (j + k, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystemQuery {
    pub model: PathModel,
    pub k: usize,
    pub n: usize,
    pub cap: usize,
}

impl PathSystemQuery {
    pub const DEFAULT_CAP: usize = 6;

    pub fn new(model: PathModel, k: usize, n: usize) -> Self {
        PathSystemQuery { model, k, n, cap: Self::DEFAULT_CAP }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

/// Lattice points visited by a path, as bits of a grid index.
#[derive(Clone, Debug, PartialEq, Eq)]
struct VertexSet(Vec<u64>);

impl VertexSet {
    fn new(bits: usize) -> Self {
        VertexSet(vec![0; bits.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(&other.0).all(|(x, y)| x & y == 0)
    }

    fn union_with(&mut self, other: &VertexSet) {
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            *x |= y;
        }
    }

    fn subtract(&mut self, other: &VertexSet) {
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            *x &= !y;
        }
    }
}

#[derive(Clone, Debug)]
struct PathRecord {
    vertices: VertexSet,
    weight: Scalar,
    horizontal: bool,
}

struct Grid {
    x_min: i64,
    height: i64,
    bits: usize,
}

impl Grid {
    fn index(&self, x: i64, y: i64) -> usize {
        ((x - self.x_min) * (self.height + 1) + y) as usize
    }
}

/// Every non-negative path between two axis points, with its vertex set.
fn enumerate_paths(model: &PathModel, grid: &Grid, from: i64, to: i64) -> Vec<PathRecord> {
    struct Walk<'a> {
        model: &'a PathModel,
        grid: &'a Grid,
        to: i64,
        w: i64,
        out: Vec<PathRecord>,
    }
    impl Walk<'_> {
        fn go(&mut self, x: i64, y: i64, verts: &mut VertexSet, weight: Scalar, horizontal: bool) {
            let left = self.to - x;
            if left == 0 && y == 0 {
                self.out.push(PathRecord { vertices: verts.clone(), weight: weight.clone(), horizontal });
            }
            // Up.
            if y < self.grid.height && self.feasible(left - 1, y + 1) {
                self.step(x + 1, y + 1, verts, weight.clone(), horizontal);
            }
            // Horizontal.
            if self.feasible(left - 1, y) {
                let w = &weight * self.model.s_at(y);
                if !w.is_zero() {
                    self.step(x + 1, y, verts, w, true);
                }
            }
            // Down.
            if y > 0 && self.feasible(left - self.w, y - 1) {
                let w = &weight * self.model.t_at(y - 1);
                if !w.is_zero() {
                    self.step(x + self.w, y - 1, verts, w, horizontal);
                }
            }
        }

        fn feasible(&self, left: i64, y: i64) -> bool {
            left >= 0 && left >= self.w * y
        }

        fn step(&mut self, x: i64, y: i64, verts: &mut VertexSet, weight: Scalar, horizontal: bool) {
            let i = self.grid.index(x, y);
            verts.insert(i);
            self.go(x, y, verts, weight, horizontal);
            verts.remove(i);
        }
    }
    let mut walk = Walk { model, grid, to, w: model.m as i64 - 1, out: Vec::new() };
    let mut verts = VertexSet::new(grid.bits);
    verts.insert(grid.index(from, 0));
    walk.go(from, 0, &mut verts, Scalar::one(), false);
    walk.out
}

fn permutation_sign(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut odd = false;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        odd ^= len % 2 == 0;
    }
    odd
}

/// Calls `visit(sigma, paths)` for each system of vertex-disjoint paths
/// `A_i -> E_sigma(i)`.
fn for_each_system(q: &PathSystemQuery, mut visit: impl FnMut(&[usize], &[&PathRecord])) -> Result<(), PathError> {
    search_systems(q, q.n, |sigma, chosen, _, _| visit(sigma, chosen))
}

fn system_grid(q: &PathSystemQuery) -> Grid {
    let n = q.n as i64;
    let k = q.k as i64;
    let x_min = -(n - 1).max(0);
    let x_max = (n - 1).max(0) + k;
    let longest = x_max - x_min;
    let w = q.model.m as i64 - 1;
    let height = if w == 0 { longest } else { longest / (w + 1) };
    Grid { x_min, height, bits: ((x_max - x_min + 1) * (height + 1)) as usize }
}

/// Enumerates disjoint systems for the first `rows` starts only, handing each
/// to `visit` with the vertices it occupies.
fn search_systems(
    q: &PathSystemQuery,
    rows: usize,
    mut visit: impl FnMut(&[usize], &[&PathRecord], &VertexSet, &Grid),
) -> Result<(), PathError> {
    if q.n > q.cap {
        return Err(PathError::CapExceeded { n: q.n, cap: q.cap });
    }
    let k = q.k as i64;
    let grid = system_grid(q);
    let paths: Vec<Vec<Vec<PathRecord>>> = (0..rows as i64)
        .map(|i| (0..q.n as i64).map(|j| enumerate_paths(&q.model, &grid, -i, j + k)).collect())
        .collect();

    struct Search<'a, F> {
        paths: &'a [Vec<Vec<PathRecord>>],
        grid: &'a Grid,
        ends: usize,
        sigma: Vec<usize>,
        chosen: Vec<&'a PathRecord>,
        used: Vec<bool>,
        occupied: VertexSet,
        visit: F,
    }
    impl<'a, F: FnMut(&[usize], &[&PathRecord], &VertexSet, &Grid)> Search<'a, F> {
        fn go(&mut self, i: usize) {
            if i == self.paths.len() {
                (self.visit)(&self.sigma, &self.chosen, &self.occupied, self.grid);
                return;
            }
            for j in 0..self.ends {
                if self.used[j] {
                    continue;
                }
                for p in &self.paths[i][j] {
                    if !p.vertices.disjoint(&self.occupied) {
                        continue;
                    }
                    self.used[j] = true;
                    self.sigma.push(j);
                    self.chosen.push(p);
                    self.occupied.union_with(&p.vertices);
                    self.go(i + 1);
                    self.occupied.subtract(&p.vertices);
                    self.chosen.pop();
                    self.sigma.pop();
                    self.used[j] = false;
                }
            }
        }
    }
    let mut search = Search {
        paths: &paths,
        grid: &grid,
        ends: q.n,
        sigma: Vec::new(),
        chosen: Vec::new(),
        used: vec![false; q.n],
        occupied: VertexSet::new(grid.bits),
        visit: &mut visit,
    };
    search.go(0);
    Ok(())
}

/// Total weight of the non-negative paths `(from, 0) -> (to, 0)` inside the
/// grid that touch no occupied vertex.
fn avoiding_weight(model: &PathModel, grid: &Grid, occupied: &VertexSet, from: i64, to: i64) -> Scalar {
    let free = |x: i64, y: i64| !occupied.contains(grid.index(x, y));
    if !free(from, 0) || !free(to, 0) {
        return Scalar::zero();
    }
    let h = grid.height;
    let w = model.m as i64 - 1;
    let cols = (to - from + 1) as usize;
    let mut dp = vec![vec![Scalar::zero(); h as usize + 1]; cols];
    dp[0][0] = Scalar::one();
    for c in 0..cols {
        let x = from + c as i64;
        if w == 0 {
            for y in (1..=h).rev() {
                let v = &dp[c][y as usize];
                if !v.is_zero() && free(x, y - 1) {
                    let add = v * model.t_at(y - 1);
                    dp[c][y as usize - 1] = &dp[c][y as usize - 1] + &add;
                }
            }
        }
        for y in 0..=h {
            let v = dp[c][y as usize].clone();
            if v.is_zero() {
                continue;
            }
            if x < to {
                if y < h && free(x + 1, y + 1) {
                    dp[c + 1][y as usize + 1] = &dp[c + 1][y as usize + 1] + &v;
                }
                if free(x + 1, y) {
                    let add = &v * model.s_at(y);
                    dp[c + 1][y as usize] = &dp[c + 1][y as usize] + &add;
                }
            }
            if w > 0 && y > 0 && x + w <= to && free(x + w, y - 1) {
                let add = &v * model.t_at(y - 1);
                let t = (c as i64 + w) as usize;
                dp[t][y as usize - 1] = &dp[t][y as usize - 1] + &add;
            }
        }
    }
    dp[cols - 1][0].clone()
}

/// Signed weight sum over all systems of non-intersecting non-negative paths.
/// By the Lindström-Gessel-Viennot lemma it equals the Hankel determinant
/// `d_k(n)` of the model's moment sequence.
pub fn lgv_det_oracle(q: &PathSystemQuery) -> Result<Scalar, PathError> {
    if q.n > q.cap {
        return Err(PathError::CapExceeded { n: q.n, cap: q.cap });
    }
    if q.n == 0 {
        return Ok(Scalar::one());
    }
    // The outermost path has the most choices; its weight is summed by a
    // dynamic program over the vertices the inner paths leave free.
    let last = q.n - 1;
    let mut total = Scalar::zero();
    let mut sigma = Vec::with_capacity(q.n);
    search_systems(q, last, |inner, chosen, occupied, grid| {
        let j = (0..q.n).find(|j| !inner.contains(j)).expect("one end left");
        let w = avoiding_weight(&q.model, grid, occupied, -(last as i64), (j + q.k) as i64);
        if w.is_zero() {
            return;
        }
        let w = chosen.iter().fold(w, |acc, p| &acc * &p.weight);
        sigma.clear();
        sigma.extend_from_slice(inner);
        sigma.push(j);
        total = if permutation_sign(&sigma) { &total - &w } else { &total + &w };
    })?;
    Ok(total)
}

/// Number of non-intersecting systems that use at least one horizontal step.
pub fn horizontal_step_census(q: &PathSystemQuery) -> Result<u64, PathError> {
    let mut count = 0;
    for_each_system(q, |_, chosen| {
        if chosen.iter().any(|p| p.horizontal) {
            count += 1;
        }
    })?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(m: u32, non_negative: bool) -> PathModel {
        PathModel::new(m, vec![Scalar::one()], vec![Scalar::one()], non_negative)
    }

    #[test]
    fn dp_examples() {
        let aerated = PathModel::new(2, vec![Scalar::zero()], vec![Scalar::one()], true);
        assert_eq!(path_weight_dp(&aerated, 4), Scalar::int(2));
        assert_eq!(path_weight_dp(&ones(3, true), 5), Scalar::int(7));
        assert_eq!(path_weight_dp(&ones(3, false), 4), Scalar::int(7));
        // Large Schroeder numbers use vertical down steps.
        let schroeder: Vec<Scalar> = (0..5).map(|n| path_weight_dp(&ones(1, true), n)).collect();
        assert_eq!(schroeder, [1, 2, 6, 22, 90].map(Scalar::int).to_vec());
    }

    #[test]
    fn lgv_examples() {
        let sym = PathModel::new(3, vec![Scalar::a()], vec![Scalar::b()], true);
        assert_eq!(lgv_det_oracle(&PathSystemQuery::new(sym.clone(), 0, 2)).unwrap(), Scalar::zero());
        assert_eq!(lgv_det_oracle(&PathSystemQuery::new(sym, 0, 3)).unwrap(), -Scalar::b().pow(2));
        let sym4 = PathModel::new(4, vec![Scalar::a()], vec![Scalar::b()], true);
        assert_eq!(lgv_det_oracle(&PathSystemQuery::new(sym4, 0, 4)).unwrap(), -Scalar::b().pow(3));
        let big = PathSystemQuery::new(ones(2, true), 0, 7);
        assert_eq!(lgv_det_oracle(&big), Err(PathError::CapExceeded { n: 7, cap: 6 }));
    }

    #[test]
    fn census_examples() {
        assert_eq!(horizontal_step_census(&PathSystemQuery::new(ones(4, true), 2, 4)).unwrap(), 0);
        assert!(horizontal_step_census(&PathSystemQuery::new(ones(3, true), 2, 3)).unwrap() > 0);
    }
}
