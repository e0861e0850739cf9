//! Independent oracles shared by the integration tests. Nothing here calls
//! into the homology or transversal code paths it is used to check.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use sqfd_core::Ideal;

/// Random nonzero squarefree ideal in `n` variables with up to `max_gens` generators.
pub fn random_ideal<R: Rng>(rng: &mut R, n: usize, max_gens: usize) -> Ideal {
    loop {
        let count = rng.gen_range(1..=max_gens);
        let masks: Vec<u64> = (0..count)
            .map(|_| {
                let d = rng.gen_range(1..=n.min(4));
                rand::seq::index::sample(rng, n, d)
                    .into_iter()
                    .fold(0u64, |acc, v| acc | 1 << v)
            })
            .collect();
        let ideal = Ideal::from_masks(n, masks).unwrap();
        if !ideal.is_zero() {
            return ideal;
        }
    }
}

/// Rank over `F_p` by schoolbook elimination on `i64` entries.
pub fn naive_rank(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    for row in m.iter_mut() {
        for v in row.iter_mut() {
            *v = v.rem_euclid(p);
        }
    }
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = (1..p).find(|&x| x * m[rank][c] % p == 1).unwrap();
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c] * inv % p;
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn subsets_of_size(sigma: u64, size: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut t = sigma;
    loop {
        if t.count_ones() as usize == size {
            out.push(t);
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & sigma;
    }
    out.sort_unstable();
    out
}

/// `β_{i,σ}(S/I)` as homology of the `σ`-graded strand of the Koszul complex
/// `K(x_1..x_n; S/I)`. The strand in homological degree `i` has basis
/// `e_τ ⊗ x^{σ∖τ}` for `τ ⊆ σ`, `|τ| = i`, `x^{σ∖τ} ∉ I`.
pub fn koszul_betti(ideal: &Ideal, p: i64) -> BTreeMap<(usize, u64), usize> {
    let n = ideal.ambient_n();
    let mut out = BTreeMap::new();
    for sigma in 0u64..(1u64 << n) {
        let size = sigma.count_ones() as usize;
        let basis: Vec<Vec<u64>> = (0..=size)
            .map(|i| {
                subsets_of_size(sigma, i)
                    .into_iter()
                    .filter(|&tau| !ideal.contains_mask(sigma & !tau))
                    .collect()
            })
            .collect();
        // d_i : K_i -> K_{i-1}, e_τ -> Σ_j ± x_j e_{τ∖j}
        let rank_of = |i: usize| -> usize {
            if i == 0 || i > size || basis[i].is_empty() || basis[i - 1].is_empty() {
                return 0;
            }
            let rows: Vec<Vec<i64>> = basis[i]
                .iter()
                .map(|&tau| {
                    let mut row = vec![0i64; basis[i - 1].len()];
                    let vars: Vec<u32> = (0..64).filter(|b| tau >> b & 1 == 1).collect();
                    for (pos, &b) in vars.iter().enumerate() {
                        let target = tau & !(1u64 << b);
                        if let Ok(c) = basis[i - 1].binary_search(&target) {
                            row[c] = if pos % 2 == 0 { 1 } else { -1 };
                        }
                    }
                    row
                })
                .collect();
            naive_rank(rows, p)
        };
        for (i, b) in basis.iter().enumerate() {
            let h = b.len() - rank_of(i) - rank_of(i + 1);
            if h > 0 && !(i == 0 && sigma == 0) {
                out.insert((i, sigma), h);
            }
        }
    }
    out
}

/// Maximum number of generators with pairwise disjoint supports, over all subsets.
pub fn brute_force_matching(ideal: &Ideal) -> usize {
    let gens = ideal.gen_masks();
    (0u64..1 << gens.len())
        .filter(|&s| {
            let mut acc = 0u64;
            for (i, &g) in gens.iter().enumerate() {
                if s >> i & 1 == 1 {
                    if acc & g != 0 {
                        return false;
                    }
                    acc |= g;
                }
            }
            true
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Inclusion-minimal vertex sets meeting every generator, by filtering all subsets.
pub fn brute_force_transversals(ideal: &Ideal) -> Vec<u64> {
    let n = ideal.ambient_n();
    let gens = ideal.gen_masks();
    let hits = |c: u64| gens.iter().all(|&g| g & c != 0);
    (0u64..1 << n)
        .filter(|&c| hits(c) && (0..n).all(|b| c >> b & 1 == 0 || !hits(c & !(1 << b))))
        .collect()
}
