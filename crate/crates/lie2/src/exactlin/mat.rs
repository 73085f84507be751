//! Dense matrices over an arbitrary [`Ring`], with exact elimination over a
//! [`Field`] (reduced row echelon form, kernels, solving) and unit-pivot
//! Gauss-Jordan inversion that also works over dual numbers.

use crate::ring::{Field, Ring};
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>, // row-major
}

pub type Vector<R> = Vec<R>;

pub fn zero_vec<R: Ring>(n: usize) -> Vector<R> {
    vec![R::zero(); n]
}

pub fn unit_vec<R: Ring>(n: usize, i: usize) -> Vector<R> {
    let mut v = zero_vec(n);
    v[i] = R::one();
    v
}

pub fn vec_is_zero<R: Ring>(v: &[R]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add<R: Ring>(a: &[R], b: &[R]) -> Vector<R> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub<R: Ring>(a: &[R], b: &[R]) -> Vector<R> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_neg<R: Ring>(a: &[R]) -> Vector<R> {
    a.iter().map(|x| x.neg()).collect()
}

pub fn vec_scale<R: Ring>(c: &R, a: &[R]) -> Vector<R> {
    a.iter().map(|x| c.mul(x)).collect()
}

pub fn vec_add_assign<R: Ring>(a: &mut [R], b: &[R]) {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    for (x, y) in a.iter_mut().zip(b) {
        x.add_assign(y);
    }
}

impl<R: Ring> Mat<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector<R>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Mat {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(cols: Vec<Vector<R>>, nrows: usize) -> Self {
        let ncols = cols.len();
        let mut m = Mat::zero(nrows, ncols);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length mismatch");
            for i in 0..nrows {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> Vector<R> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| c.mul(a)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out: Mat<R> = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = a.mul(&rhs[(k, j)]);
                    out[(i, j)].add_assign(&term);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vector<R> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for j in 0..self.cols {
                    acc.add_assign(&self[(i, j)].mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Gauss-Jordan inversion pivoting only on units. Over a field this is
    /// ordinary inversion; over a local ring (dual numbers) it still decides
    /// invertibility, because a matrix there is invertible iff its reduction
    /// modulo the maximal ideal is.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot_row = (col..n).find_map(|r| a[(r, col)].inv().map(|p| (r, p)));
            let (r, pinv) = pivot_row?;
            if r != col {
                a.swap_rows(r, col);
                inv.swap_rows(r, col);
            }
            a.scale_row(col, &pinv);
            inv.scale_row(col, &pinv);
            for i in 0..n {
                if i != col && !a[(i, col)].is_zero() {
                    let factor = a[(i, col)].clone();
                    a.sub_scaled_row(i, col, &factor);
                    inv.sub_scaled_row(i, col, &factor);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn scale_row(&mut self, i: usize, c: &R) {
        for k in 0..self.cols {
            let v = self[(i, k)].mul(c);
            self[(i, k)] = v;
        }
    }

    /// row_i -= c * row_j
    fn sub_scaled_row(&mut self, i: usize, j: usize, c: &R) {
        for k in 0..self.cols {
            let t = c.mul(&self[(j, k)]);
            let v = self[(i, k)].sub(&t);
            self[(i, k)] = v;
        }
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<R> {
    pub mat: Mat<R>,
    pub pivots: Vec<usize>,
}

impl<R: Field> Mat<R> {
    pub fn rref(&self) -> Rref<R> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, row);
            let pinv = m[(row, col)].inv().expect("nonzero is invertible in a field");
            m.scale_row(row, &pinv);
            for i in 0..m.rows {
                if i != row && !m[(i, col)].is_zero() {
                    let factor = m[(i, col)].clone();
                    m.sub_scaled_row(i, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// A basis of `{v : self * v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vector<R>> {
        let Rref { mat, pivots } = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = zero_vec::<R>(self.cols);
            v[free] = R::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = mat[(r, free)].neg();
            }
            basis.push(v);
        }
        basis
    }

    /// A basis of the column space, as the pivot columns of the original matrix.
    pub fn column_space_basis(&self) -> Vec<Vector<R>> {
        let Rref { pivots, .. } = self.rref();
        pivots.iter().map(|&j| self.col(j)).collect()
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[R]) -> Option<Vector<R>> {
        assert_eq!(self.rows, b.len(), "dimension mismatch");
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let Rref { mat, pivots } = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = zero_vec::<R>(self.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = mat[(r, self.cols)].clone();
        }
        Some(x)
    }
}

impl<R> std::ops::Index<(usize, usize)> for Mat<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<R> std::ops::IndexMut<(usize, usize)> for Mat<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Ring> fmt::Display for Mat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Dual;
    use crate::scalar::Scalar;

    fn m(rows: &[&[i64]]) -> Mat<Scalar> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(vec_is_zero(&a.mul_vec(&k[0])));
        // proportional to (2, -1)
        let v = &k[0];
        assert_eq!(v[0].mul(&Scalar::from_i64(-1)), v[1].mul(&Scalar::from_i64(2)));
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let b = vec![Scalar::from_i64(3), Scalar::from_i64(2)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2));

        let sing = m(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        assert!(sing.solve(&vec![Scalar::zero(), Scalar::one()]).is_none());
    }

    #[test]
    fn dual_inverse_requires_unit_reduction() {
        type D = Dual<Scalar>;
        // id + eps*N is invertible, eps*id is not
        let n = Mat::<D>::from_fn(2, 2, |i, j| {
            if i == 0 && j == 1 {
                D::infinitesimal(Scalar::one())
            } else if i == j {
                D::one()
            } else {
                D::zero()
            }
        });
        let inv = n.inverse().unwrap();
        assert_eq!(n.mul(&inv), Mat::identity(2));
        let eps_id = Mat::<D>::identity(2).scale(&D::epsilon());
        assert!(eps_id.inverse().is_none());
    }

    #[test]
    fn rank_nullity_small() {
        let a = m(&[&[1, 0, 2], &[0, 1, 3]]);
        assert_eq!(a.rank() + a.kernel_basis().len(), a.cols());
    }
}
