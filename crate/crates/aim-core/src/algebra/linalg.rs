//! Exact linear algebra over the rationals: just enough row reduction to
//! compute nullspaces of the coefficient systems the solvers build.

use super::scalar::Scalar;

/// A dense row-major matrix of exact rationals.
#[derive(Debug, Clone)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.at(row, col).recip().expect("pivot is nonzero");
            for c in col..self.cols {
                let v = &*self.at(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = &*self.at(r, c) - &(&factor * &*self.at(row, c));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }

    /// Basis of the right nullspace `{v : A v = 0}`, one vector per free
    /// column, each with a 1 in its free position.
    pub fn nullspace(mut self) -> Vec<Vec<Scalar>> {
        let pivots = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut m = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                m[c] = Some(r);
            }
            m
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (c, pr) in pivot_of_col.iter().enumerate() {
                if let Some(r) = pr {
                    v[c] = -self.at(*r, free);
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn nullspace_of_rank_one() {
        // x + 2y = 0 has nullspace spanned by (-2, 1)
        let ns = m(&[&[1, 2]]).nullspace();
        assert_eq!(ns, vec![vec![Scalar::from(-2), Scalar::from(1)]]);
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let ns = m(&[&[1, 0], &[0, 3]]).nullspace();
        assert!(ns.is_empty());
    }

    #[test]
    fn nullspace_vectors_satisfy_system() {
        let a = m(&[&[2, -1, 3, 0], &[1, 1, 1, 1]]);
        let ns = a.clone().nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in 0..a.rows {
                let mut acc = Scalar::zero();
                for c in 0..a.cols {
                    acc = &acc + &(&*a.at(r, c) * &v[c]);
                }
                assert!(acc.is_zero());
            }
        }
    }
}
