//! Dense two-phase simplex for the tiny linear programs that arise on
//! singular faces of the solution set.
//!
//! Solves `max cᵀy` subject to rows `a_r y {=, >=, <=} b_r` and `y >= 0`,
//! using Bland's rule throughout so degenerate faces cannot cycle.

const EPS: f64 = 1e-9;
const MAX_PIVOTS: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    Eq,
    Ge,
    Le,
}

#[derive(Clone, Debug)]
pub struct Row {
    pub coeffs: Vec<f64>,
    pub kind: RowKind,
    pub rhs: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: f64,
        point: Vec<f64>,
        /// every basic feasible solution visited in phase two, in order
        vertices: Vec<Vec<f64>>,
    },
    Infeasible,
    Unbounded,
    PivotLimit,
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> f64 {
        self.rows[r][self.width]
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col];
        for v in self.rows[r].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.rows[r].clone();
        for (k, row) in self.rows.iter_mut().enumerate() {
            if k == r {
                continue;
            }
            let f = row[col];
            if f != 0.0 {
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                    if v.abs() < 1e-13 {
                        *v = 0.0;
                    }
                }
            }
        }
        self.basis[r] = col;
    }

    fn reduced_cost(&self, cost: &[f64], col: usize) -> f64 {
        cost[col]
            - self
                .basis
                .iter()
                .zip(&self.rows)
                .map(|(&b, row)| cost[b] * row[col])
                .sum::<f64>()
    }

    fn objective(&self, cost: &[f64]) -> f64 {
        self.basis.iter().enumerate().map(|(r, &b)| cost[b] * self.rhs(r)).sum()
    }

    fn point(&self, nvars: usize) -> Vec<f64> {
        let mut y = vec![0.0; nvars];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < nvars {
                y[b] = self.rhs(r).max(0.0);
            }
        }
        y
    }

    /// Runs Bland's rule on `cost` over the columns allowed by `allowed`.
    /// Returns `Some(false)` when unbounded, `None` when the pivot limit hits.
    fn optimize(
        &mut self,
        cost: &[f64],
        allowed: &dyn Fn(usize) -> bool,
        mut visit: impl FnMut(&Tableau),
    ) -> Option<bool> {
        visit(self);
        for _ in 0..MAX_PIVOTS {
            let entering = (0..self.width)
                .filter(|&j| allowed(j) && !self.basis.contains(&j))
                .find(|&j| self.reduced_cost(cost, j) > EPS);
            let Some(col) = entering else {
                return Some(true);
            };
            let mut leave: Option<(usize, f64)> = None;
            for r in 0..self.rows.len() {
                let a = self.rows[r][col];
                if a > EPS {
                    let ratio = self.rhs(r) / a;
                    leave = match leave {
                        None => Some((r, ratio)),
                        Some((lr, lratio)) => {
                            if ratio < lratio - 1e-12
                                || (ratio <= lratio + 1e-12 && self.basis[r] < self.basis[lr])
                            {
                                Some((r, ratio))
                            } else {
                                Some((lr, lratio))
                            }
                        }
                    };
                }
            }
            let Some((r, _)) = leave else {
                return Some(false);
            };
            self.pivot(r, col);
            visit(self);
        }
        None
    }
}

/// Maximizes `cost · y` over `rows` with `y >= 0`.
pub fn maximize(cost: &[f64], rows: &[Row]) -> LpOutcome {
    let nvars = cost.len();
    // normalize to nonnegative right-hand sides
    let rows: Vec<Row> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.coeffs.len(), nvars);
            if r.rhs < 0.0 {
                Row {
                    coeffs: r.coeffs.iter().map(|v| -v).collect(),
                    kind: match r.kind {
                        RowKind::Eq => RowKind::Eq,
                        RowKind::Ge => RowKind::Le,
                        RowKind::Le => RowKind::Ge,
                    },
                    rhs: -r.rhs,
                }
            } else {
                r.clone()
            }
        })
        .collect();

    let n_slack = rows.iter().filter(|r| r.kind != RowKind::Eq).count();
    let n_art = rows.iter().filter(|r| r.kind != RowKind::Le).count();
    let width = nvars + n_slack + n_art;
    let art_start = nvars + n_slack;

    let mut t = Tableau { rows: Vec::with_capacity(rows.len()), basis: Vec::new(), width };
    let (mut s, mut a) = (nvars, art_start);
    for r in &rows {
        let mut line = vec![0.0; width + 1];
        line[..nvars].copy_from_slice(&r.coeffs);
        line[width] = r.rhs;
        match r.kind {
            RowKind::Le => {
                line[s] = 1.0;
                t.basis.push(s);
                s += 1;
            }
            RowKind::Ge => {
                line[s] = -1.0;
                s += 1;
                line[a] = 1.0;
                t.basis.push(a);
                a += 1;
            }
            RowKind::Eq => {
                line[a] = 1.0;
                t.basis.push(a);
                a += 1;
            }
        }
        t.rows.push(line);
    }

    let scale = 1.0 + rows.iter().map(|r| r.rhs).sum::<f64>();
    if n_art > 0 {
        let phase1: Vec<f64> = (0..width).map(|j| if j >= art_start { -1.0 } else { 0.0 }).collect();
        match t.optimize(&phase1, &|_| true, |_| {}) {
            None => return LpOutcome::PivotLimit,
            Some(false) => unreachable!("phase one objective is bounded by zero"),
            Some(true) => {}
        }
        if t.objective(&phase1) < -EPS * scale {
            return LpOutcome::Infeasible;
        }
        // drive zero-level artificials out of the basis; drop redundant rows
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= art_start {
                match (0..art_start).find(|&j| t.rows[r][j].abs() > EPS) {
                    Some(col) => {
                        t.pivot(r, col);
                        r += 1;
                    }
                    None => {
                        t.rows.remove(r);
                        t.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }
    }

    let mut full_cost = vec![0.0; width];
    full_cost[..nvars].copy_from_slice(cost);
    let mut vertices: Vec<Vec<f64>> = Vec::new();
    let status = t.optimize(&full_cost, &|j| j < art_start, |tab| {
        let y = tab.point(nvars);
        if !vertices.contains(&y) {
            vertices.push(y);
        }
    });
    match status {
        None => LpOutcome::PivotLimit,
        Some(false) => LpOutcome::Unbounded,
        Some(true) => LpOutcome::Optimal {
            value: t.objective(&full_cost),
            point: t.point(nvars),
            vertices,
        },
    }
}
