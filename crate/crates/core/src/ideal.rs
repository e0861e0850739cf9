//! Squarefree monomial ideals.
//!
//! A squarefree monomial is identified with its support, stored as a bitmask
//! in which bit `i - 1` stands for the variable `x_i`. An [`Ideal`] is kept in
//! canonical form: an antichain under divisibility, sorted by ascending mask,
//! with no duplicates. The empty antichain is the zero ideal; the unit ideal
//! is not representable.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported number of variables (supports live in one `u64`).
pub const MAX_VARS: usize = 63;

pub(crate) fn check_ambient(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::InvalidAmbient(n));
    }
    Ok(())
}

/// Mask with the low `n` bits set, i.e. all variables of the ambient ring.
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Variable indices (1-based, ascending) of a support mask.
pub fn mask_vars(mask: u64) -> Vec<usize> {
    BitIter(mask).map(|b| b + 1).collect()
}

pub(crate) fn var_bit(j: usize) -> u64 {
    1u64 << (j - 1)
}

/// Iterates the set bit positions (0-based) of a mask in ascending order.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// A squarefree monomial `x^support` in `K[x_1..x_n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    support: u64,
    ambient_n: usize,
}

impl Monomial {
    pub fn from_mask(support: u64, ambient_n: usize) -> Result<Self> {
        check_ambient(ambient_n)?;
        if support & !full_mask(ambient_n) != 0 {
            return Err(Error::InvalidGenerator(format!(
                "support {:?} exceeds {} variables",
                mask_vars(support),
                ambient_n
            )));
        }
        Ok(Monomial { support, ambient_n })
    }

    /// Builds a monomial from 1-based variable indices; repeated indices collapse.
    pub fn from_vars(vars: &[usize], ambient_n: usize) -> Result<Self> {
        check_ambient(ambient_n)?;
        let mut support = 0u64;
        for &v in vars {
            if v == 0 || v > ambient_n {
                return Err(Error::InvalidGenerator(format!(
                    "variable index {v} outside 1..={ambient_n}"
                )));
            }
            support |= var_bit(v);
        }
        Ok(Monomial { support, ambient_n })
    }

    pub fn support(&self) -> u64 {
        self.support
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn degree(&self) -> usize {
        self.support.count_ones() as usize
    }

    pub fn vars(&self) -> Vec<usize> {
        mask_vars(self.support)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.support & !other.support == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support == 0 {
            return write!(f, "1");
        }
        for v in self.vars() {
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

/// Support of a monomial prime `(x_i : i in C)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSupport {
    pub vars: u64,
}

impl PrimeSupport {
    pub fn var_list(&self) -> Vec<usize> {
        mask_vars(self.vars)
    }

    /// Height of the prime, i.e. the number of variables generating it.
    pub fn height(&self) -> usize {
        self.vars.count_ones() as usize
    }
}

/// A squarefree monomial ideal of `K[x_1..x_n]` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    ambient_n: usize,
    gens: Vec<u64>,
}

/// Divisibility-minimal elements of `masks`, sorted ascending and deduplicated.
fn minimal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|&m| (m.count_ones(), m));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&g| g & !m == 0) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

impl Ideal {
    pub fn zero(ambient_n: usize) -> Result<Self> {
        check_ambient(ambient_n)?;
        Ok(Ideal {
            ambient_n,
            gens: Vec::new(),
        })
    }

    /// Canonical ideal generated by `raw`.
    pub fn minimize_generators(raw: &[Monomial], ambient_n: usize) -> Result<Self> {
        check_ambient(ambient_n)?;
        let mut masks = Vec::with_capacity(raw.len());
        for m in raw {
            if m.ambient_n != ambient_n {
                return Err(Error::AmbientMismatch {
                    expected: ambient_n,
                    found: m.ambient_n,
                });
            }
            masks.push(m.support);
        }
        Self::from_masks(ambient_n, masks)
    }

    /// Canonical ideal generated by raw support masks.
    pub fn from_masks(ambient_n: usize, masks: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_ambient(ambient_n)?;
        let full = full_mask(ambient_n);
        let mut raw = Vec::new();
        for m in masks {
            if m == 0 {
                return Err(Error::InvalidGenerator(
                    "empty support (constant generator)".into(),
                ));
            }
            if m & !full != 0 {
                return Err(Error::InvalidGenerator(format!(
                    "support {:?} exceeds {} variables",
                    mask_vars(m),
                    ambient_n
                )));
            }
            raw.push(m);
        }
        Ok(Ideal {
            ambient_n,
            gens: minimal_masks(raw),
        })
    }

    /// Canonical ideal generated by supports given as 1-based variable lists.
    pub fn from_supports<S: AsRef<[usize]>>(ambient_n: usize, supports: &[S]) -> Result<Self> {
        let mut masks = Vec::with_capacity(supports.len());
        for s in supports {
            let s = s.as_ref();
            if s.is_empty() {
                return Err(Error::InvalidGenerator(
                    "empty support (constant generator)".into(),
                ));
            }
            masks.push(Monomial::from_vars(s, ambient_n)?.support);
        }
        Self::from_masks(ambient_n, masks)
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    /// Generator supports in canonical (ascending mask) order.
    pub fn gen_masks(&self) -> &[u64] {
        &self.gens
    }

    pub fn generators(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.gens.iter().map(move |&support| Monomial {
            support,
            ambient_n: self.ambient_n,
        })
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Membership of the squarefree monomial with support `mask`.
    pub fn contains_mask(&self, mask: u64) -> bool {
        self.gens.iter().any(|&g| g & !mask == 0)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        if m.ambient_n != self.ambient_n {
            return Err(Error::AmbientMismatch {
                expected: self.ambient_n,
                found: m.ambient_n,
            });
        }
        Ok(self.contains_mask(m.support))
    }

    /// Ideal containment `self ⊆ other`, checked generator-wise.
    pub fn is_subideal_of(&self, other: &Ideal) -> bool {
        self.ambient_n == other.ambient_n && self.gens.iter().all(|&g| other.contains_mask(g))
    }

    fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    fn check_var(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.ambient_n {
            return Err(Error::InvalidGenerator(format!(
                "variable index {j} outside 1..={}",
                self.ambient_n
            )));
        }
        Ok(())
    }

    /// The `k`-th squarefree power `I^[k]`.
    ///
    /// Every squarefree monomial of `I^k` is divisible by a product of `k`
    /// generators with pairwise disjoint supports, so those products
    /// (minimized) generate `I^[k]`.
    pub fn squarefree_power(&self, k: usize) -> Result<Ideal> {
        if k == 0 {
            return Err(Error::InvalidExponent(k));
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let mut products = Vec::new();
        disjoint_unions(&self.gens, 0, k, 0, &mut products);
        Ok(Ideal {
            ambient_n: self.ambient_n,
            gens: minimal_masks(products),
        })
    }

    /// `ν(I)`: the maximum number of generators with pairwise disjoint supports.
    pub fn nu(&self) -> Result<usize> {
        self.require_nonzero()?;
        let mut best = 0;
        max_matching(&self.gens, 0, 0, 0, &mut best);
        Ok(best)
    }

    /// Minimum degree of a monomial in the ideal.
    pub fn min_gen_degree(&self) -> Result<usize> {
        self.require_nonzero()?;
        Ok(self
            .gens
            .iter()
            .map(|g| g.count_ones() as usize)
            .min()
            .expect("nonzero ideal"))
    }

    /// The colon ideal `(I : x_j)`. Fails with [`Error::UnitIdeal`] when `x_j ∈ I`.
    pub fn colon_by_variable(&self, j: usize) -> Result<Ideal> {
        self.check_var(j)?;
        let bit = var_bit(j);
        if self.gens.contains(&bit) {
            return Err(Error::UnitIdeal);
        }
        Ok(Ideal {
            ambient_n: self.ambient_n,
            gens: minimal_masks(self.gens.iter().map(|&g| g & !bit).collect()),
        })
    }

    /// The sum `(I, x_j)`.
    pub fn add_variable(&self, j: usize) -> Result<Ideal> {
        self.check_var(j)?;
        let bit = var_bit(j);
        let mut gens: Vec<u64> = self
            .gens
            .iter()
            .copied()
            .filter(|&g| g & bit == 0)
            .collect();
        gens.push(bit);
        gens.sort_unstable();
        Ok(Ideal {
            ambient_n: self.ambient_n,
            gens,
        })
    }

    /// Minimal primes, i.e. minimal transversals of the generator supports,
    /// sorted by ascending mask.
    pub fn minimal_primes(&self) -> Result<Vec<PrimeSupport>> {
        self.require_nonzero()?;
        let mut out = Vec::new();
        transversals(&self.gens, 0, 0, &mut out);
        out.retain(|&c| is_minimal_transversal(&self.gens, c));
        out.sort_unstable();
        Ok(out.into_iter().map(|vars| PrimeSupport { vars }).collect())
    }

    /// Krull dimension of `S/I`.
    pub fn krull_dim(&self) -> usize {
        match self.minimal_primes() {
            Ok(primes) => self.ambient_n - primes.iter().map(|p| p.height()).min().unwrap_or(0),
            Err(_) => self.ambient_n,
        }
    }

    /// Alexander dual: generated by `x_C` over the minimal primes `C`.
    pub fn alexander_dual(&self) -> Result<Ideal> {
        let primes = self.minimal_primes()?;
        Self::from_masks(self.ambient_n, primes.into_iter().map(|p| p.vars))
    }

    /// Same generators in a polynomial ring with `ambient_n` variables.
    pub fn with_ambient(&self, ambient_n: usize) -> Result<Ideal> {
        Self::from_masks(ambient_n, self.gens.iter().copied())
    }

    /// Applies the variable relabeling `x_i -> x_{perm[i-1]}`.
    pub fn permute(&self, perm: &[usize]) -> Result<Ideal> {
        if perm.len() != self.ambient_n {
            return Err(Error::AmbientMismatch {
                expected: self.ambient_n,
                found: perm.len(),
            });
        }
        let masks = self
            .gens
            .iter()
            .map(|&g| {
                BitIter(g)
                    .map(|b| var_bit(perm[b]))
                    .fold(0u64, |acc, bit| acc | bit)
            })
            .collect::<Vec<_>>();
        Self::from_masks(self.ambient_n, masks)
    }

    /// Serializes to the line-oriented ideal text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.ambient_n);
        for &g in &self.gens {
            let line: Vec<String> = mask_vars(g).iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the ideal text format: an `n=<count>` header, then one generator per line.
    pub fn parse_text(text: &str) -> Result<Ideal> {
        let mut ambient: Option<usize> = None;
        let mut supports: Vec<Vec<usize>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match ambient {
                None => {
                    let value = line
                        .strip_prefix("n=")
                        .ok_or_else(|| Error::parse(lineno, "expected header `n=<count>`"))?;
                    let n: usize = value.trim().parse().map_err(|_| {
                        Error::parse(lineno, format!("bad variable count `{value}`"))
                    })?;
                    check_ambient(n).map_err(|e| Error::parse(lineno, e.to_string()))?;
                    ambient = Some(n);
                }
                Some(n) => {
                    let mut vars = Vec::new();
                    for tok in line.split_whitespace() {
                        let v: usize = tok.parse().map_err(|_| {
                            Error::parse(lineno, format!("bad variable index `{tok}`"))
                        })?;
                        if v == 0 || v > n {
                            return Err(Error::parse(
                                lineno,
                                format!("variable index {v} outside 1..={n}"),
                            ));
                        }
                        vars.push(v);
                    }
                    supports.push(vars);
                }
            }
        }
        let n = ambient.ok_or_else(|| Error::parse(1, "missing header `n=<count>`"))?;
        Self::from_supports(n, &supports)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, m) in self.generators().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: usize,
    gens: Vec<Vec<usize>>,
}

/// JSON form `{"n": ..., "gens": [[...], ...]}` with generators in canonical order.
impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRepr {
            n: self.ambient_n,
            gens: self.gens.iter().map(|&g| mask_vars(g)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Ideal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = IdealRepr::deserialize(deserializer)?;
        Ideal::from_supports(repr.n, &repr.gens).map_err(serde::de::Error::custom)
    }
}

impl FromStr for Ideal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ideal::parse_text(s)
    }
}

fn disjoint_unions(gens: &[u64], start: usize, remaining: usize, acc: u64, out: &mut Vec<u64>) {
    if remaining == 0 {
        out.push(acc);
        return;
    }
    if gens.len() - start < remaining {
        return;
    }
    for i in start..gens.len() {
        if gens.len() - i < remaining {
            break;
        }
        if gens[i] & acc == 0 {
            disjoint_unions(gens, i + 1, remaining - 1, acc | gens[i], out);
        }
    }
}

fn max_matching(gens: &[u64], start: usize, used: u64, size: usize, best: &mut usize) {
    *best = (*best).max(size);
    for i in start..gens.len() {
        if size + (gens.len() - i) <= *best {
            return;
        }
        if gens[i] & used == 0 {
            max_matching(gens, i + 1, used | gens[i], size + 1, best);
        }
    }
}

/// Branches on the variables of the first generator not yet hit; the
/// variables tried earlier in that generator are forbidden in later branches
/// so every transversal is produced at most once.
fn transversals(gens: &[u64], chosen: u64, forbidden: u64, out: &mut Vec<u64>) {
    let Some(&g) = gens.iter().find(|&&g| g & chosen == 0) else {
        out.push(chosen);
        return;
    };
    let mut forbidden = forbidden;
    for b in BitIter(g & !forbidden) {
        let bit = 1u64 << b;
        let next = chosen | bit;
        // Prune branches in which an earlier choice already lost every private generator.
        if BitIter(chosen).all(|c| has_private_gen(gens, next, 1u64 << c)) {
            transversals(gens, next, forbidden, out);
        }
        forbidden |= bit;
    }
}

fn has_private_gen(gens: &[u64], set: u64, bit: u64) -> bool {
    gens.iter().any(|&g| g & set == bit)
}

fn is_minimal_transversal(gens: &[u64], c: u64) -> bool {
    BitIter(c).all(|b| has_private_gen(gens, c, 1u64 << b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[usize]]) -> Ideal {
        Ideal::from_supports(n, gens).unwrap()
    }

    fn family6() -> Ideal {
        ideal(
            6,
            &[&[1, 3, 5], &[1, 3, 6], &[1, 4, 5], &[2, 3, 4], &[2, 3, 6]],
        )
    }

    fn supports(i: &Ideal) -> Vec<Vec<usize>> {
        i.gen_masks().iter().map(|&m| mask_vars(m)).collect()
    }

    #[test]
    fn minimize_drops_multiples() {
        let i = ideal(3, &[&[1, 2], &[1, 2, 3]]);
        assert_eq!(supports(&i), vec![vec![1, 2]]);
    }

    #[test]
    fn minimize_keeps_family_antichain() {
        let i = family6();
        assert_eq!(i.num_gens(), 5);
        let mut expected = vec![
            vec![1, 3, 5],
            vec![1, 3, 6],
            vec![1, 4, 5],
            vec![2, 3, 4],
            vec![2, 3, 6],
        ];
        expected.sort_by_key(|v| v.iter().map(|&x| var_bit(x)).sum::<u64>());
        assert_eq!(supports(&i), expected);
    }

    #[test]
    fn minimize_empty_is_zero_ideal() {
        let i = Ideal::minimize_generators(&[], 4).unwrap();
        assert!(i.is_zero());
        assert_eq!(i.ambient_n(), 4);
    }

    #[test]
    fn minimize_rejects_bad_generators() {
        assert!(matches!(
            Ideal::from_masks(3, [0]),
            Err(Error::InvalidGenerator(_))
        ));
        assert!(matches!(
            Ideal::from_supports(3, &[&[1, 4][..]]),
            Err(Error::InvalidGenerator(_))
        ));
        let m = Monomial::from_vars(&[1], 4).unwrap();
        assert!(matches!(
            Ideal::minimize_generators(&[m], 3),
            Err(Error::AmbientMismatch { .. })
        ));
        assert!(matches!(Ideal::zero(64), Err(Error::InvalidAmbient(64))));
    }

    #[test]
    fn membership() {
        let i = ideal(3, &[&[1, 2]]);
        let m = |v: &[usize]| Monomial::from_vars(v, 3).unwrap();
        assert!(i.contains_monomial(&m(&[1, 2, 3])).unwrap());
        assert!(!i.contains_monomial(&m(&[1, 3])).unwrap());
        let full = Monomial::from_vars(&[1, 2, 3, 4, 5, 6], 6).unwrap();
        assert!(family6().contains_monomial(&full).unwrap());
        assert!(matches!(
            i.contains_monomial(&full),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn squarefree_powers() {
        let p = family6().squarefree_power(2).unwrap();
        assert_eq!(supports(&p), vec![vec![1, 2, 3, 4, 5, 6]]);
        assert!(ideal(2, &[&[1, 2]]).squarefree_power(2).unwrap().is_zero());
        let p = ideal(4, &[&[1, 2], &[3, 4]]).squarefree_power(2).unwrap();
        assert_eq!(supports(&p), vec![vec![1, 2, 3, 4]]);
        assert_eq!(family6().squarefree_power(1).unwrap(), family6());
        assert!(matches!(
            family6().squarefree_power(0),
            Err(Error::InvalidExponent(0))
        ));
    }

    #[test]
    fn nu_values() {
        assert_eq!(family6().nu().unwrap(), 2);
        assert_eq!(ideal(2, &[&[1, 2]]).nu().unwrap(), 1);
        assert_eq!(ideal(6, &[&[1, 2], &[3, 4], &[5, 6]]).nu().unwrap(), 3);
        assert!(matches!(
            Ideal::zero(3).unwrap().nu(),
            Err(Error::ZeroIdeal)
        ));
    }

    #[test]
    fn min_degrees() {
        assert_eq!(family6().min_gen_degree().unwrap(), 3);
        assert_eq!(
            family6()
                .squarefree_power(2)
                .unwrap()
                .min_gen_degree()
                .unwrap(),
            6
        );
        assert_eq!(ideal(3, &[&[1], &[2, 3]]).min_gen_degree().unwrap(), 1);
        assert!(matches!(
            Ideal::zero(3).unwrap().min_gen_degree(),
            Err(Error::ZeroIdeal)
        ));
    }

    #[test]
    fn colon_by_variable() {
        let c = family6().colon_by_variable(3).unwrap();
        assert_eq!(c, ideal(6, &[&[2, 4], &[2, 6], &[1, 5], &[1, 6]]));
        assert_eq!(
            ideal(2, &[&[1, 2]]).colon_by_variable(1).unwrap(),
            ideal(2, &[&[2]])
        );
        assert_eq!(
            ideal(3, &[&[1, 2]]).colon_by_variable(3).unwrap(),
            ideal(3, &[&[1, 2]])
        );
        assert!(matches!(
            ideal(3, &[&[1, 2]]).colon_by_variable(4),
            Err(Error::InvalidGenerator(_))
        ));
        assert!(matches!(
            ideal(3, &[&[1]]).colon_by_variable(1),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn add_variable() {
        assert_eq!(
            family6().add_variable(3).unwrap(),
            ideal(6, &[&[3], &[1, 4, 5]])
        );
        assert_eq!(
            Ideal::zero(2).unwrap().add_variable(1).unwrap(),
            ideal(2, &[&[1]])
        );
        let x1 = ideal(2, &[&[1]]);
        assert_eq!(x1.add_variable(1).unwrap(), x1);
        assert!(x1.add_variable(0).is_err());
    }

    #[test]
    fn minimal_primes_examples() {
        let primes = family6().minimal_primes().unwrap();
        assert!(primes.iter().any(|p| p.var_list() == vec![4, 5, 6]));
        let p: Vec<_> = ideal(2, &[&[1, 2]])
            .minimal_primes()
            .unwrap()
            .iter()
            .map(|p| p.var_list())
            .collect();
        assert_eq!(p, vec![vec![1], vec![2]]);
        let p: Vec<_> = ideal(3, &[&[1, 2], &[1, 3], &[2, 3]])
            .minimal_primes()
            .unwrap()
            .iter()
            .map(|p| p.var_list())
            .collect();
        assert_eq!(p, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert!(matches!(
            Ideal::zero(2).unwrap().minimal_primes(),
            Err(Error::ZeroIdeal)
        ));
    }

    #[test]
    fn krull_dimension() {
        assert_eq!(family6().krull_dim(), 4);
        assert_eq!(ideal(2, &[&[1, 2]]).krull_dim(), 1);
        assert_eq!(Ideal::zero(5).unwrap().krull_dim(), 5);
    }

    #[test]
    fn alexander_duals() {
        let e = ideal(2, &[&[1, 2]]);
        let d = e.alexander_dual().unwrap();
        assert_eq!(d, ideal(2, &[&[1], &[2]]));
        assert_eq!(d.alexander_dual().unwrap(), e);
        let tri = ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(tri.alexander_dual().unwrap(), tri);
    }

    #[test]
    fn text_round_trip() {
        let text = family6().to_text();
        assert_eq!(text, "n=6\n2 3 4\n1 3 5\n1 4 5\n1 3 6\n2 3 6\n");
        assert_eq!(Ideal::parse_text(&text).unwrap().to_text(), text);
        let z: Ideal = "# zero\nn=4\n".parse().unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_text(), "n=4\n");
    }

    #[test]
    fn text_parse_errors() {
        assert!(matches!(
            Ideal::parse_text("n=4\n1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Ideal::parse_text("1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Ideal::parse_text("n=3\n1 4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(Ideal::parse_text("").is_err());
    }

    #[test]
    fn json_form() {
        let json = serde_json::to_string(&family6()).unwrap();
        assert_eq!(
            json,
            r#"{"n":6,"gens":[[2,3,4],[1,3,5],[1,4,5],[1,3,6],[2,3,6]]}"#
        );
        let back: Ideal = serde_json::from_str(&json).unwrap();
        assert_eq!(back, family6());
        assert!(serde_json::from_str::<Ideal>(r#"{"n":2,"gens":[[3]]}"#).is_err());
    }

    #[test]
    fn permutation_relabels() {
        let i = ideal(3, &[&[1, 2]]);
        assert_eq!(i.permute(&[3, 2, 1]).unwrap(), ideal(3, &[&[2, 3]]));
    }
}
