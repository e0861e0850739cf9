//! Dense linear algebra over prime fields.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldSpec {
    characteristic: u32,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { characteristic: 2 }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Largest accepted characteristic; keeps products of residues inside `u32`.
    pub const MAX_CHAR: u32 = 65521;

    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) || p > Self::MAX_CHAR {
            return Err(Error::InvalidField(p));
        }
        Ok(FieldSpec { characteristic: p })
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    /// The prime used to cross-check a computation done over `self`.
    pub fn companion(&self) -> FieldSpec {
        if self.characteristic == 3 {
            FieldSpec { characteristic: 2 }
        } else {
            FieldSpec { characteristic: 3 }
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.characteristic));
        let p = self.characteristic as u64;
        let mut base = a as u64 % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }

    /// Reduces a signed integer into `0..p`.
    pub fn reduce(&self, a: i64) -> u32 {
        a.rem_euclid(self.characteristic as i64) as u32
    }
}

/// A dense matrix over `F_p`, entries stored row-major as residues.
#[derive(Clone, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    /// Sets an entry from a signed integer, reducing it mod `p`.
    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        let v = self.field.reduce(value);
        self.data[r * self.cols + c] = v;
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if self.field.characteristic == 2 {
            self.rank_gf2()
        } else {
            self.rank_odd()
        }
    }

    fn rank_gf2(&self) -> usize {
        let words = self.cols.div_ceil(64);
        let mut m = vec![0u64; self.rows * words];
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) & 1 == 1 {
                    m[r * words + c / 64] |= 1u64 << (c % 64);
                }
            }
        }
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let (w, bit) = (c / 64, 1u64 << (c % 64));
            let Some(pivot) = (rank..self.rows).find(|&r| m[r * words + w] & bit != 0) else {
                continue;
            };
            if pivot != rank {
                for k in 0..words {
                    m.swap(pivot * words + k, rank * words + k);
                }
            }
            let (head, tail) = m.split_at_mut((rank + 1) * words);
            let prow = &head[rank * words..];
            for row in tail.chunks_exact_mut(words) {
                if row[w] & bit != 0 {
                    for k in w..words {
                        row[k] ^= prow[k];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn rank_odd(&self) -> usize {
        let p = self.field.characteristic;
        let cols = self.cols;
        let mut m = self.data.clone();
        let mut rank = 0;
        let mut support: Vec<(usize, u32)> = Vec::with_capacity(cols);
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank..self.rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            if pivot != rank {
                for k in c..cols {
                    m.swap(pivot * cols + k, rank * cols + k);
                }
            }
            let inv = self.field.inv(m[rank * cols + c]);
            support.clear();
            for k in c..cols {
                let v = m[rank * cols + k];
                if v != 0 {
                    support.push((k, v * inv % p));
                }
            }
            for row in m[(rank + 1) * cols..].chunks_exact_mut(cols) {
                let f = row[c];
                if f == 0 {
                    continue;
                }
                let neg = p - f;
                for &(k, v) in &support {
                    row[k] = (row[k] + neg * v) % p;
                }
            }
            rank += 1;
        }
        rank
    }
}
