//! Exact linear systems over the scalar field.
//!
//! Plain Gaussian elimination into reduced row echelon form, entirely over
//! exact rational functions. Pivoting is deterministic (first unknown, first
//! row), so solution bases are reproducible across runs.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Default)]
pub struct LinearSystem {
    unknowns: Vec<String>,
    index: BTreeMap<String, usize>,
    rows: Vec<Row>,
}

#[derive(Debug, Clone)]
pub struct Row {
    pub coeffs: BTreeMap<usize, Scalar>,
    pub constant: Scalar,
    /// Provenance label carried into inconsistency reports.
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct SolutionSpace {
    pub unknowns: Vec<String>,
    pub consistent: bool,
    /// Label of a row that reduced to 0 = nonzero (when inconsistent).
    pub conflict: Option<String>,
    pub particular: Vec<Scalar>,
    pub homogeneous_basis: Vec<Vec<Scalar>>,
}

impl LinearSystem {
    pub fn new() -> Self {
        LinearSystem::default()
    }

    pub fn unknown(&mut self, name: &str) -> usize {
        if let Some(&k) = self.index.get(name) {
            return k;
        }
        let k = self.unknowns.len();
        self.unknowns.push(name.to_string());
        self.index.insert(name.to_string(), k);
        k
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Add the equation `sum coeffs = constant`. Zero coefficients are dropped.
    pub fn add_row(&mut self, coeffs: Vec<(usize, Scalar)>, constant: Scalar, label: &str) {
        let mut map = BTreeMap::new();
        for (k, c) in coeffs {
            assert!(k < self.unknowns.len(), "row references undeclared unknown");
            if c.is_zero() {
                continue;
            }
            match map.entry(k) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = &*e.get() + &c;
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        self.rows.push(Row {
            coeffs: map,
            constant,
            label: label.to_string(),
        });
    }

    pub fn solve(&self) -> SolutionSpace {
        solve_linear(self)
    }
}

pub fn solve_linear(sys: &LinearSystem) -> SolutionSpace {
    let n = sys.unknowns.len();
    let mut rows: Vec<Row> = sys.rows.iter().filter(|r| !r.coeffs.is_empty() || !r.constant.is_zero()).cloned().collect();
    // pivot column -> echelon row
    let mut echelon: Vec<(usize, Row)> = Vec::new();

    for col in 0..n {
        let Some(pos) = rows.iter().position(|r| r.coeffs.contains_key(&col)) else {
            continue;
        };
        let mut pivot = rows.swap_remove(pos);
        // swap_remove breaks row order; restore determinism by re-sorting on
        // label order is overkill -- elimination result is order-independent
        // because we reduce fully below.
        let p = pivot.coeffs.get(&col).unwrap().clone();
        let pinv = p.recip().expect("pivot coefficient is nonzero");
        scale_row(&mut pivot, &pinv);
        for r in rows.iter_mut() {
            eliminate(r, col, &pivot);
        }
        for (_, r) in echelon.iter_mut() {
            eliminate(r, col, &pivot);
        }
        rows.retain(|r| !r.coeffs.is_empty() || !r.constant.is_zero());
        echelon.push((col, pivot));
    }

    // Remaining rows have empty coefficient maps; any nonzero constant means
    // the system is inconsistent.
    if let Some(bad) = rows.iter().find(|r| !r.constant.is_zero()) {
        return SolutionSpace {
            unknowns: sys.unknowns.clone(),
            consistent: false,
            conflict: Some(bad.label.clone()),
            particular: Vec::new(),
            homogeneous_basis: Vec::new(),
        };
    }

    let pivot_cols: Vec<usize> = echelon.iter().map(|(c, _)| *c).collect();
    let mut particular = vec![Scalar::zero(); n];
    for (c, r) in &echelon {
        particular[*c] = r.constant.clone();
    }

    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); n];
        v[free] = Scalar::one();
        for (c, r) in &echelon {
            if let Some(a) = r.coeffs.get(&free) {
                v[*c] = -a;
            }
        }
        basis.push(v);
    }

    SolutionSpace {
        unknowns: sys.unknowns.clone(),
        consistent: true,
        conflict: None,
        particular,
        homogeneous_basis: basis,
    }
}

fn scale_row(r: &mut Row, c: &Scalar) {
    for v in r.coeffs.values_mut() {
        *v = &*v * c;
    }
    r.constant = &r.constant * c;
}

fn eliminate(r: &mut Row, col: usize, pivot: &Row) {
    let Some(f) = r.coeffs.get(&col).cloned() else {
        return;
    };
    for (k, pc) in &pivot.coeffs {
        let delta = &f * pc;
        match r.coeffs.entry(*k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                let v = -&delta;
                if !v.is_zero() {
                    e.insert(v);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = &*e.get() - &delta;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }
    r.constant = &r.constant - &(&f * &pivot.constant);
    debug_assert!(!r.coeffs.contains_key(&col));
}

impl SolutionSpace {
    pub fn dimension(&self) -> usize {
        self.homogeneous_basis.len()
    }

    pub fn is_unique(&self) -> bool {
        self.consistent && self.homogeneous_basis.is_empty()
    }

    pub fn value(&self, name: &str) -> Option<&Scalar> {
        let k = self.unknowns.iter().position(|u| u == name)?;
        self.particular.get(k)
    }

    pub fn basis_value(&self, b: usize, name: &str) -> Option<&Scalar> {
        let k = self.unknowns.iter().position(|u| u == name)?;
        self.homogeneous_basis.get(b)?.get(k)
    }

    /// Residual of a row under `particular + sum(coords * basis)`; used by
    /// tests to confirm zero residual on every input row.
    pub fn residual(&self, sys: &LinearSystem, row: usize, coords: &[Scalar]) -> Scalar {
        let r = &sys.rows[row];
        let mut acc = -&r.constant;
        for (k, c) in &r.coeffs {
            let mut val = self.particular[*k].clone();
            for (b, t) in coords.iter().enumerate() {
                val = &val + &(t * &self.homogeneous_basis[b][*k]);
            }
            acc = &acc + &(c * &val);
        }
        acc
    }

    pub fn rows_of<'a>(&self, sys: &'a LinearSystem) -> &'a [Row] {
        &sys.rows
    }
}
