//! Dense square matrices over a ring, with products that skip zero entries.

use std::fmt;

use crate::rings::{Ring, RingElement, RingError};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    n: usize,
    entries: Vec<RingElement>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix over {} ({}x{})", self.ring, self.n, self.n)?;
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zero(ring: &Ring, n: usize) -> Matrix {
        Matrix {
            ring: ring.clone(),
            n,
            entries: vec![ring.zero(); n * n],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        let mut m = Matrix::zero(ring, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<RingElement>>) -> Result<Matrix, RingError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(RingError::InvalidArgument("matrix must be square".into()));
            }
            for e in row {
                if e.ring() != ring {
                    return Err(RingError::DescriptorMismatch {
                        left: ring.to_string(),
                        right: e.ring().to_string(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(Matrix {
            ring: ring.clone(),
            n,
            entries,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &RingElement {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: RingElement) {
        self.entries[r * self.n + c] = value;
    }

    pub fn row(&self, r: usize) -> &[RingElement] {
        &self.entries[r * self.n..(r + 1) * self.n]
    }

    pub fn column(&self, c: usize) -> Vec<RingElement> {
        (0..self.n).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|r| {
            (0..self.n).all(|c| {
                let e = self.get(r, c);
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn entries_all_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| r == c || self.get(r, c).is_zero()))
    }

    /// `row[target] += factor * row[source]`.
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &RingElement) {
        let n = self.n;
        for c in 0..n {
            let s = &self.entries[source * n + c];
            if s.is_zero() {
                continue;
            }
            let delta = factor * s;
            let t = &mut self.entries[target * n + c];
            *t = &*t + &delta;
        }
    }

    /// `col[target] += factor * col[source]`.
    pub fn add_column_multiple(&mut self, target: usize, source: usize, factor: &RingElement) {
        let n = self.n;
        for r in 0..n {
            let s = &self.entries[r * n + source];
            if s.is_zero() {
                continue;
            }
            let delta = s * factor;
            let t = &mut self.entries[r * n + target];
            *t = &*t + &delta;
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, RingError> {
        if self.ring != other.ring {
            return Err(RingError::DescriptorMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        if self.n != other.n {
            return Err(RingError::InvalidArgument("matrix sizes differ".into()));
        }
        let n = self.n;
        let nonzero_rows: Vec<Vec<usize>> = (0..n)
            .map(|k| (0..n).filter(|&j| !other.get(k, j).is_zero()).collect())
            .collect();
        let mut out = Matrix::zero(&self.ring, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in &nonzero_rows[k] {
                    let t = &mut out.entries[i * n + j];
                    *t = &*t + &(a * other.get(k, j));
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Matrix {
            ring: self.ring.clone(),
            n: self.n,
            entries,
        }
    }

    pub fn apply(&self, v: &[RingElement]) -> Vec<RingElement> {
        (0..self.n)
            .map(|r| {
                let mut acc = self.ring.zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Characteristic polynomial `det(tI − A)` by Berkowitz's division-free
    /// algorithm, as coefficients of `t^n, t^{n-1}, ..., t^0`.
    pub fn charpoly(&self) -> Vec<RingElement> {
        let ring = &self.ring;
        let mut coeffs = vec![ring.one()];
        for k in 0..self.n {
            // leading k x k block A_k, row R = A[k][..k], column S = A[..k][k]
            let mut q = vec![ring.one(), -self.get(k, k)];
            let mut vec_s: Vec<RingElement> = (0..k).map(|i| self.get(i, k).clone()).collect();
            for _ in 0..k {
                let rs = (0..k).fold(ring.zero(), |acc, i| &acc + &(self.get(k, i) * &vec_s[i]));
                q.push(-&rs);
                vec_s = (0..k)
                    .map(|i| (0..k).fold(ring.zero(), |acc, j| &acc + &(self.get(i, j) * &vec_s[j])))
                    .collect();
            }
            let mut next = vec![ring.zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, c) in coeffs.iter().enumerate() {
                    if i >= j && i - j < q.len() {
                        *slot = &*slot + &(&q[i - j] * c);
                    }
                }
            }
            coeffs = next;
        }
        coeffs
    }

    pub fn determinant(&self) -> RingElement {
        let c = self.charpoly().pop().expect("nonempty");
        if self.n.is_multiple_of(2) {
            c
        } else {
            -&c
        }
    }

    /// Inverse through Cayley–Hamilton; `None` when the determinant is not a unit.
    pub fn inverse(&self) -> Option<Matrix> {
        let coeffs = self.charpoly();
        let n = self.n;
        let cn_inv = coeffs[n].try_invert()?;
        // A^{-1} = -c_n^{-1} (A^{n-1} + c_1 A^{n-2} + ... + c_{n-1} I)
        let mut acc = Matrix::identity(&self.ring, n);
        for c in coeffs.iter().take(n).skip(1) {
            acc = self.mul(&acc).expect("same ring");
            for i in 0..n {
                let t = &mut acc.entries[i * n + i];
                *t = &*t + c;
            }
        }
        let scale = -&cn_inv;
        for e in acc.entries.iter_mut() {
            *e = &*e * &scale;
        }
        Some(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.n)
            .map(|r| serde_json::Value::Array(self.row(r).iter().map(RingElement::to_json).collect()))
            .collect();
        serde_json::Value::Array(rows)
    }

    pub fn from_json(ring: &Ring, value: &serde_json::Value) -> Result<Matrix, RingError> {
        let rows = value
            .as_array()
            .ok_or_else(|| RingError::Parse("matrix must be an array of rows".into()))?;
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| RingError::Parse("matrix row must be an array".into()))?
                    .iter()
                    .map(|e| ring.element_from_json(e))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::from_rows(ring, rows)
    }
}
