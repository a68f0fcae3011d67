use std::collections::HashMap;

use super::{ColumnRef, DiscretizedView};
use crate::{Error, Result};

/// Joint code of a tuple of columns: row `i` gets the id of its cell, with
/// ids assigned densely in order of first appearance.
///
/// Cells are found by hashing code tuples pairwise, so the cost is
/// `O(n · columns)` whatever the arities are. Because ids follow row order,
/// the per-cell counts (and hence the entropy) do not depend on the order in
/// which columns are joined.
#[derive(Debug, Clone)]
pub(crate) struct Joint {
    ids: Vec<u32>,
    cells: u32,
}

impl Joint {
    /// The empty tuple: every row in a single cell.
    pub fn unit(n: usize) -> Joint {
        Joint {
            ids: vec![0; n],
            cells: 1,
        }
    }

    pub fn of(n: usize, cols: &[ColumnRef<'_>]) -> Joint {
        cols.iter().fold(Joint::unit(n), |j, c| j.with(*c))
    }

    pub fn with(&self, col: ColumnRef<'_>) -> Joint {
        debug_assert_eq!(col.codes.len(), self.ids.len());
        let arity = u64::from(col.arity.max(1));
        let span = u64::from(self.cells) * arity;
        let n = self.ids.len();
        let mut ids = Vec::with_capacity(n);
        let mut cells = 0u32;
        if span <= 4 * n as u64 + 64 {
            let mut table = vec![u32::MAX; span as usize];
            for (&id, &code) in self.ids.iter().zip(col.codes) {
                let slot = &mut table[(u64::from(id) * arity + u64::from(code)) as usize];
                if *slot == u32::MAX {
                    *slot = cells;
                    cells += 1;
                }
                ids.push(*slot);
            }
        } else {
            let mut table: HashMap<u64, u32> = HashMap::with_capacity(n);
            for (&id, &code) in self.ids.iter().zip(col.codes) {
                let key = u64::from(id) * arity + u64::from(code);
                let next = cells;
                let id = *table.entry(key).or_insert_with(|| {
                    cells += 1;
                    next
                });
                ids.push(id);
            }
        }
        Joint { ids, cells }
    }

    /// Joins two joint codes over the same rows.
    pub fn join(&self, other: &Joint) -> Joint {
        self.with(other.as_column())
    }

    pub fn as_column(&self) -> ColumnRef<'_> {
        ColumnRef {
            codes: &self.ids,
            arity: self.cells,
        }
    }

    /// Plug-in entropy in bits; empty cells never occur.
    pub fn entropy(&self) -> f64 {
        let n = self.ids.len();
        if n == 0 {
            return 0.0;
        }
        let mut counts = vec![0u32; self.cells as usize];
        for &id in &self.ids {
            counts[id as usize] += 1;
        }
        let n = n as f64;
        counts
            .into_iter()
            .map(|c| {
                let p = f64::from(c) / n;
                -p * p.log2()
            })
            .sum()
    }
}

/// Clamp for quantities that are nonnegative in exact arithmetic.
pub(crate) fn nonnegative(value: f64) -> f64 {
    debug_assert!(value > -1e-9, "plug-in estimate {value} far below zero");
    value.max(0.0)
}

/// `M(A; B | C)` from the four joint entropies.
pub(crate) fn nonnegative_cmi(h_ac: f64, h_bc: f64, h_abc: f64, h_c: f64) -> f64 {
    nonnegative(h_ac + h_bc - h_abc - h_c)
}

fn row_count(groups: &[&[ColumnRef<'_>]]) -> usize {
    groups
        .iter()
        .flat_map(|g| g.iter())
        .map(|c| c.codes.len())
        .next()
        .unwrap_or(0)
}

/// Joint plug-in entropy of the given columns; `0` for no columns.
pub fn entropy_of(cols: &[ColumnRef<'_>]) -> f64 {
    Joint::of(row_count(&[cols]), cols).entropy()
}

/// `H(A) + H(B) - H(A, B)`, clamped at zero.
pub fn mutual_information_of(a: &[ColumnRef<'_>], b: &[ColumnRef<'_>]) -> f64 {
    conditional_mi_of(a, b, &[])
}

/// `H(A, C) + H(B, C) - H(A, B, C) - H(C)`, clamped at zero.
pub fn conditional_mi_of(a: &[ColumnRef<'_>], b: &[ColumnRef<'_>], c: &[ColumnRef<'_>]) -> f64 {
    let n = row_count(&[a, b, c]);
    let jc = Joint::of(n, c);
    let jac = a.iter().fold(jc.clone(), |j, col| j.with(*col));
    let jbc = b.iter().fold(jc.clone(), |j, col| j.with(*col));
    let jabc = b.iter().fold(jac.clone(), |j, col| j.with(*col));
    nonnegative_cmi(jac.entropy(), jbc.entropy(), jabc.entropy(), jc.entropy())
}

impl DiscretizedView {
    fn refs(&self, cols: &[usize]) -> Result<Vec<ColumnRef<'_>>> {
        cols.iter()
            .map(|&c| {
                if c < self.n_columns() {
                    Ok(self.column(c))
                } else {
                    Err(Error::invalid(format!(
                        "column {c} out of range for {} columns",
                        self.n_columns()
                    )))
                }
            })
            .collect()
    }

    /// Joint plug-in entropy of the listed view columns, in bits.
    pub fn entropy(&self, cols: &[usize]) -> Result<f64> {
        if cols.is_empty() {
            return Err(Error::invalid("entropy of an empty column set"));
        }
        Ok(Joint::of(self.n_rows(), &self.refs(cols)?).entropy())
    }

    pub fn mutual_information(&self, a: &[usize], b: &[usize]) -> Result<f64> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::invalid("mutual information needs two nonempty sets"));
        }
        disjoint(&[a, b])?;
        let (a, b) = (self.refs(a)?, self.refs(b)?);
        let n = self.n_rows();
        let (ja, jb) = (Joint::of(n, &a), Joint::of(n, &b));
        Ok(nonnegative(ja.entropy() + jb.entropy() - ja.join(&jb).entropy()))
    }

    /// `M(A; B | C)`; an empty `C` gives the plain mutual information.
    pub fn conditional_mi(&self, a: &[usize], b: &[usize], c: &[usize]) -> Result<f64> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::invalid("conditional mutual information needs nonempty A and B"));
        }
        disjoint(&[a, b, c])?;
        Ok(conditional_mi_of(&self.refs(a)?, &self.refs(b)?, &self.refs(c)?))
    }

    /// `II(label, k, j) = M(k; label | j) - M(k; label)`.
    ///
    /// Positive values mean synergy, negative values redundancy.
    pub fn interaction_information(&self, label: usize, k: usize, j: usize) -> Result<f64> {
        if label == k || label == j || k == j {
            return Err(Error::invalid("interaction information needs three distinct columns"));
        }
        Ok(self.conditional_mi(&[k], &[label], &[j])? - self.mutual_information(&[k], &[label])?)
    }
}

fn disjoint(sets: &[&[usize]]) -> Result<()> {
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            if let Some(c) = a.iter().find(|c| b.contains(c)) {
                return Err(Error::invalid(format!("column {c} appears in overlapping sets")));
            }
        }
    }
    Ok(())
}
