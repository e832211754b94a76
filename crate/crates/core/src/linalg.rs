//! Exact subspaces of `Q^n` in reduced row-echelon form.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geom::Rational;

pub type RatVector = Vec<Rational>;

/// Row-reduced basis of a subspace. Equal subspaces have identical rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient: usize,
    rows: Vec<RatVector>,
}

/// Reduces `rows` in place to reduced row-echelon form and drops zero rows.
pub fn rref(rows: &mut Vec<RatVector>, ambient: usize) {
    let mut pivot_row = 0;
    for col in 0..ambient {
        if pivot_row == rows.len() {
            break;
        }
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = Rational::one() / &rows[pivot_row][col];
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x -= &factor * p;
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
}

impl SubspaceBasis {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
        }
    }

    /// Span of the given generators.
    pub fn span(ambient: usize, generators: impl IntoIterator<Item = RatVector>) -> Result<Self> {
        let mut rows = Vec::new();
        for g in generators {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch {
                    left: ambient,
                    right: g.len(),
                });
            }
            rows.push(g);
        }
        rref(&mut rows, ambient);
        Ok(Self { ambient, rows })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[RatVector] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Pivot column of each row.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rest = v.to_vec();
        for (row, col) in self.rows.iter().zip(self.pivots()) {
            let f = rest[col].clone();
            if !f.is_zero() {
                for (x, r) in rest.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
        }
        rest.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (i, x) in row.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}

fn check_ambient(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch {
            left: a.ambient,
            right: b.ambient,
        });
    }
    Ok(())
}

pub fn span_sum(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis> {
    check_ambient(a, b)?;
    SubspaceBasis::span(a.ambient, a.rows.iter().chain(&b.rows).cloned())
}

pub fn span_dim(a: &SubspaceBasis) -> usize {
    a.dim()
}

/// `dim(A ∩ B) = dim A + dim B - dim(A + B)`.
pub fn intersection_dim(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<usize> {
    Ok(a.dim() + b.dim() - span_sum(a, b)?.dim())
}

/// Unit-difference vector `e_i - e_k` of length `ambient`.
pub fn difference_vector(ambient: usize, i: usize, k: usize) -> RatVector {
    let mut v = vec![Rational::zero(); ambient];
    v[i] += Rational::one();
    v[k] -= Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(ambient: usize, pairs: &[(usize, usize)]) -> SubspaceBasis {
        SubspaceBasis::span(
            ambient,
            pairs.iter().map(|&(i, k)| difference_vector(ambient, i, k)),
        )
        .unwrap()
    }

    #[test]
    fn braid_spans() {
        let a = span(6, &[(0, 5), (1, 5)]);
        let b = span(6, &[(3, 5), (4, 5)]);
        assert_eq!(intersection_dim(&a, &b).unwrap(), 0);
        let all = span(
            6,
            &[(0, 5), (1, 5), (0, 4), (2, 4), (1, 3), (2, 3), (3, 5), (4, 5)],
        );
        assert_eq!(all.dim(), 5);
        assert_eq!(span_sum(&a, &a).unwrap(), a);
    }

    #[test]
    fn canonical_rows() {
        let a = span(4, &[(0, 1), (1, 2)]);
        let b = span(4, &[(0, 2), (2, 1)]);
        assert_eq!(a, b);
        assert_eq!(a.pivots(), vec![0, 1]);
        assert!(a.contains(&difference_vector(4, 0, 2)));
        assert!(!a.contains(&difference_vector(4, 0, 3)));
    }

    #[test]
    fn mismatch() {
        let a = SubspaceBasis::zero(3);
        let b = SubspaceBasis::zero(4);
        assert_eq!(
            span_sum(&a, &b),
            Err(Error::DimensionMismatch { left: 3, right: 4 })
        );
        assert!(SubspaceBasis::span(3, [vec![Rational::one()]]).is_err());
    }
}
