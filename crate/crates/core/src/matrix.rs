//! Dense square matrices of nonnegative integers, indexed by the spectrum.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut, Mul};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    size: usize,
    data: Vec<u32>,
}

impl IntMatrix {
    pub fn zeros(size: usize) -> Self {
        IntMatrix { size, data: vec![0; size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.data.chunks(self.size.max(1)).take(self.size)
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.rows().map(|r| r.iter().map(|&x| u64::from(x)).sum()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn add_assign_scaled(&mut self, other: &IntMatrix, k: u32) {
        assert_eq!(self.size, other.size);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += k * b;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = u32;
    fn index(&self, (i, j): (usize, usize)) -> &u32 {
        &self.data[i * self.size + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u32 {
        &mut self.data[i * self.size + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let mut a = IntMatrix::zeros(3);
        a[(0, 1)] = 2;
        a[(2, 0)] = 5;
        let id = IntMatrix::identity(3);
        assert_eq!(&a * &id, a);
        assert_eq!(&id * &a, a);
        assert_eq!(a.transpose()[(1, 0)], 2);
        assert_eq!(a.row_sums(), vec![2, 0, 5]);
    }

    #[test]
    fn empty_matrix() {
        let z = IntMatrix::zeros(0);
        assert_eq!(z.rows().count(), 0);
        assert!(z.row_sums().is_empty());
    }
}
