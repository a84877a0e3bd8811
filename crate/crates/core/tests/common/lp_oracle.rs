//! Brute-force vertex enumeration for small LPs.
#![allow(dead_code)]

use fdea_core::{LpProblem, Relation};
use proptest::prelude::*;

#[derive(Debug, Clone)]
pub struct Row {
    pub a: Vec<f64>,
    pub rel: Relation,
    pub b: f64,
}

/// Solves the square system by Gaussian elimination; `None` if singular.
fn solve_square(mut m: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Option<Vec<f64>> {
    let n = rhs.len();
    for c in 0..n {
        let piv = (c..n).max_by(|&i, &k| m[i][c].abs().total_cmp(&m[k][c].abs()))?;
        if m[piv][c].abs() < 1e-9 {
            return None;
        }
        m.swap(c, piv);
        rhs.swap(c, piv);
        for i in 0..n {
            if i != c {
                let f = m[i][c] / m[c][c];
                let pivot_row = m[c].clone();
                for (v, pv) in m[i][c..].iter_mut().zip(&pivot_row[c..]) {
                    *v -= f * pv;
                }
                rhs[i] -= f * rhs[c];
            }
        }
    }
    Some((0..n).map(|i| rhs[i] / m[i][i]).collect())
}

fn feasible(rows: &[Row], x: &[f64]) -> bool {
    const EPS: f64 = 1e-7;
    x.iter().all(|&v| v >= -EPS)
        && rows.iter().all(|r| {
            let lhs: f64 = r.a.iter().zip(x).map(|(a, v)| a * v).sum();
            match r.rel {
                Relation::Le => lhs <= r.b + EPS,
                Relation::Ge => lhs >= r.b - EPS,
                Relation::Eq => (lhs - r.b).abs() <= EPS,
            }
        })
}

/// Best objective over all basic feasible points, or `None` if there are none.
pub fn enumerate(c: &[f64], rows: &[Row]) -> Option<f64> {
    let n = c.len();
    // candidate hyperplanes: each row at equality plus each x_k = 0
    let mut planes: Vec<(Vec<f64>, f64)> = rows.iter().map(|r| (r.a.clone(), r.b)).collect();
    for k in 0..n {
        let mut e = vec![0.0; n];
        e[k] = 1.0;
        planes.push((e, 0.0));
    }
    let mut best: Option<f64> = None;
    let total = planes.len();
    let mut pick = vec![0usize; n];
    fn rec(
        start: usize,
        depth: usize,
        total: usize,
        pick: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if depth == pick.len() {
            visit(pick);
            return;
        }
        for i in start..total {
            pick[depth] = i;
            rec(i + 1, depth + 1, total, pick, visit);
        }
    }
    rec(0, 0, total, &mut pick, &mut |sel: &[usize]| {
        let m = sel.iter().map(|&i| planes[i].0.clone()).collect();
        let b = sel.iter().map(|&i| planes[i].1).collect();
        if let Some(x) = solve_square(m, b) {
            if feasible(rows, &x) {
                let v: f64 = c.iter().zip(&x).map(|(a, b)| a * b).sum();
                best = Some(best.map_or(v, |cur: f64| cur.max(v)));
            }
        }
    });
    best
}

fn relation() -> impl Strategy<Value = Relation> {
    prop_oneof![Just(Relation::Le), Just(Relation::Ge), Just(Relation::Eq)]
}

/// A bounding row `Σ a_k x_k ≤ B` with a_k ≥ 1 plus up to three random rows.
pub fn bounded_lp() -> impl Strategy<Value = (Vec<f64>, Vec<Row>)> {
    (1..=3usize, 0..=3usize).prop_flat_map(|(n, extra)| {
        let int = |lo: i32, hi: i32| (lo..=hi).prop_map(f64::from);
        (
            proptest::collection::vec(int(-4, 6), n),
            proptest::collection::vec(int(1, 4), n),
            int(1, 12),
            proptest::collection::vec(
                (
                    proptest::collection::vec(int(-4, 4), n),
                    relation(),
                    int(-4, 8),
                ),
                extra,
            ),
        )
            .prop_map(|(c, bound, cap, extra)| {
                let mut rows = vec![Row {
                    a: bound,
                    rel: Relation::Le,
                    b: cap,
                }];
                rows.extend(extra.into_iter().map(|(a, rel, b)| Row { a, rel, b }));
                (c, rows)
            })
    })
}

pub fn build(c: &[f64], rows: &[Row]) -> LpProblem {
    rows.iter().fold(LpProblem::maximize(c.to_vec()), |lp, r| {
        lp.with_constraint(r.a.clone(), r.rel, r.b)
    })
}
