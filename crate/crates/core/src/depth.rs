//! Multigraded Betti numbers of `S/I` via Hochster's formula, and the
//! invariants derived from them: projective dimension, depth, regularity and
//! the normalized depth profile `g_I(k)`.
//!
//! `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ_σ)` where `Δ_σ` is the induced
//! subcomplex of the Stanley–Reisner complex on the vertex set `σ`.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::complex::{induced_faces, reduced_homology_dims};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::FieldSpec;

/// Whether `Δ_σ` is a cone: some vertex of `σ` lies in no generator support inside `σ`.
pub fn is_cone(ideal: &Ideal, sigma: u64) -> bool {
    let covered = ideal
        .gen_masks()
        .iter()
        .filter(|&&g| g & !sigma == 0)
        .fold(0u64, |acc, &g| acc | g);
    covered != sigma
}

/// The nonempty vertex sets whose induced complex is not a cone, ascending.
///
/// These are exactly the unions of generator supports, so they are produced
/// by closing the generator set under union instead of filtering all `2^n`
/// subsets.
pub fn non_cone_subsets(ideal: &Ideal) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::new();
    let mut all: Vec<u64> = Vec::new();
    for &g in ideal.gen_masks() {
        let grown: Vec<u64> = all
            .iter()
            .map(|&s| s | g)
            .chain(std::iter::once(g))
            .filter(|s| !seen.contains(s))
            .collect();
        for s in grown {
            if seen.insert(s) {
                all.push(s);
            }
        }
    }
    all.sort_unstable();
    all
}

/// Multigraded Betti numbers `β_{i,σ}` of `S/I` over `F_p`.
///
/// Only positive entries are stored; `β_{0,∅} = 1` is left implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    field: FieldSpec,
    ambient_n: usize,
    entries: BTreeMap<(usize, u64), usize>,
}

impl BettiTable {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    /// Positive multigraded entries keyed by `(i, σ)`.
    pub fn entries(&self) -> &BTreeMap<(usize, u64), usize> {
        &self.entries
    }

    pub fn get(&self, i: usize, sigma: u64) -> usize {
        self.entries.get(&(i, sigma)).copied().unwrap_or(0)
    }

    /// Graded Betti numbers `β_{i,j} = Σ_{|σ|=j} β_{i,σ}`.
    pub fn graded(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (&(i, sigma), &v) in &self.entries {
            *out.entry((i, sigma.count_ones() as usize)).or_insert(0) += v;
        }
        out
    }

    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn regularity(&self) -> usize {
        self.entries
            .keys()
            .map(|&(i, sigma)| sigma.count_ones() as usize - i)
            .max()
            .unwrap_or(0)
    }
}

/// Hochster's formula over the non-cone vertex sets, evaluated in parallel and
/// merged in ascending `σ` order.
pub fn betti_table(ideal: &Ideal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let per_sigma: Vec<Vec<((usize, u64), usize)>> = non_cone_subsets(ideal)
        .par_iter()
        .map(|&sigma| sigma_betti(ideal, sigma, field))
        .collect();
    Ok(BettiTable {
        field,
        ambient_n: ideal.ambient_n(),
        entries: per_sigma.into_iter().flatten().collect(),
    })
}

fn sigma_betti(ideal: &Ideal, sigma: u64, field: FieldSpec) -> Vec<((usize, u64), usize)> {
    let size = sigma.count_ones() as usize;
    let dims = reduced_homology_dims(&induced_faces(ideal, sigma), field);
    // dims[d + 1] = H̃_d and i = |σ| - d - 1, so i = |σ| - idx
    dims.iter()
        .enumerate()
        .filter(|&(_, &v)| v > 0)
        .map(|(idx, &v)| ((size - idx, sigma), v))
        .collect()
}

pub fn proj_dim(ideal: &Ideal, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(ideal, field)?.proj_dim())
}

/// `depth(S/I) = n - pd(S/I)`; the zero ideal has depth `n`.
pub fn depth(ideal: &Ideal, field: FieldSpec) -> Result<usize> {
    if ideal.is_zero() {
        return Ok(ideal.ambient_n());
    }
    Ok(ideal.ambient_n() - proj_dim(ideal, field)?)
}

pub fn regularity(ideal: &Ideal, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(ideal, field)?.regularity())
}

/// Depth, projective dimension and regularity of `S/I` over one field,
/// optionally cross-checked over a second one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthReport {
    pub depth: usize,
    pub proj_dim: usize,
    pub regularity: usize,
    pub field: FieldSpec,
    pub ambient_n: usize,
    /// Graded Betti numbers `(i, j) -> β_{i,j}`.
    pub betti: BTreeMap<(usize, usize), usize>,
    /// Set when the cross-check field gave a different graded Betti table.
    pub field_sensitive: bool,
}

impl DepthReport {
    pub fn compute(
        ideal: &Ideal,
        field: FieldSpec,
        cross_check: Option<FieldSpec>,
    ) -> Result<Self> {
        let ambient_n = ideal.ambient_n();
        let graded = |f: FieldSpec| -> Result<BTreeMap<(usize, usize), usize>> {
            if ideal.is_zero() {
                Ok(BTreeMap::new())
            } else {
                Ok(betti_table(ideal, f)?.graded())
            }
        };
        let betti = graded(field)?;
        let field_sensitive = match cross_check {
            Some(other) if other != field => graded(other)? != betti,
            _ => false,
        };
        let proj_dim = betti.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let regularity = betti.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        let report = DepthReport {
            depth: ambient_n - proj_dim,
            proj_dim,
            regularity,
            field,
            ambient_n,
            betti,
            field_sensitive,
        };
        debug_assert_eq!(report.depth + report.proj_dim, report.ambient_n);
        Ok(report)
    }
}

impl Serialize for DepthReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            value: usize,
        }
        let betti: Vec<Entry> = self
            .betti
            .iter()
            .map(|(&(i, j), &value)| Entry { i, j, value })
            .collect();
        let mut s = serializer.serialize_struct("DepthReport", 7)?;
        s.serialize_field("n", &self.ambient_n)?;
        s.serialize_field("field_char", &self.field.characteristic())?;
        s.serialize_field("betti", &betti)?;
        s.serialize_field("proj_dim", &self.proj_dim)?;
        s.serialize_field("depth", &self.depth)?;
        s.serialize_field("regularity", &self.regularity)?;
        s.serialize_field("field_sensitive", &self.field_sensitive)?;
        s.end()
    }
}

/// One value `g_I(k) = depth(S/I^[k]) - (d_k - 1)` with its ingredients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GEntry {
    pub k: usize,
    pub d_k: usize,
    pub depth: usize,
    pub g: i64,
}

/// The normalized depth function `g_I` on `1..=ν(I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GProfile {
    pub nu: usize,
    pub profile: Vec<GEntry>,
}

impl GProfile {
    pub fn values(&self) -> Vec<i64> {
        self.profile.iter().map(|e| e.g).collect()
    }

    /// Positions `k` with `g(k+1) > g(k)`.
    pub fn violations(&self) -> Vec<usize> {
        self.profile
            .windows(2)
            .filter(|w| w[1].g > w[0].g)
            .map(|w| w[0].k)
            .collect()
    }

    /// Largest `g(k+1) - g(k)`, if `ν ≥ 2`.
    pub fn max_increase(&self) -> Option<i64> {
        self.profile.windows(2).map(|w| w[1].g - w[0].g).max()
    }
}

pub fn g_profile(ideal: &Ideal, field: FieldSpec) -> Result<GProfile> {
    let nu = ideal.nu()?;
    let mut profile = Vec::with_capacity(nu);
    for k in 1..=nu {
        let power = ideal.squarefree_power(k)?;
        let d_k = power.min_gen_degree()?;
        let depth = depth(&power, field)?;
        profile.push(GEntry {
            k,
            d_k,
            depth,
            g: depth as i64 - (d_k as i64 - 1),
        });
    }
    Ok(GProfile { nu, profile })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> Ideal {
        Ideal::from_supports(n, gens).unwrap()
    }

    fn family(n: usize) -> Ideal {
        crate::family::build_family(n).unwrap()
    }

    fn c4() -> Ideal {
        ideal(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
    }

    #[test]
    fn non_cone_subsets_match_filtering() {
        let samples = [
            family(6),
            c4(),
            ideal(5, &[&[1], &[2, 3], &[3, 4, 5]]),
            ideal(4, &[&[1, 2, 3, 4]]),
        ];
        for i in &samples {
            let brute: Vec<u64> = (1..1u64 << i.ambient_n())
                .filter(|&s| !is_cone(i, s))
                .collect();
            assert_eq!(non_cone_subsets(i), brute, "{i}");
        }
    }

    #[test]
    fn betti_of_single_edge() {
        let t = betti_table(&ideal(2, &[&[1, 2]]), f(2)).unwrap();
        assert_eq!(t.entries().len(), 1);
        assert_eq!(t.get(1, 0b11), 1);
    }

    #[test]
    fn betti_of_triangle() {
        for p in [2, 3] {
            let t = betti_table(&ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]), f(p)).unwrap();
            let graded = t.graded();
            assert_eq!(graded.get(&(1, 2)), Some(&3));
            assert_eq!(graded.get(&(2, 3)), Some(&2));
            assert_eq!(graded.len(), 2);
            assert_eq!(t.regularity(), 1);
        }
    }

    #[test]
    fn betti_of_four_cycle() {
        let t = betti_table(&c4(), f(2)).unwrap();
        assert_eq!(t.get(3, 0b1111), 1);
        assert_eq!(t.proj_dim(), 3);
    }

    #[test]
    fn zero_ideal_conventions() {
        let z = Ideal::zero(4).unwrap();
        assert!(matches!(betti_table(&z, f(2)), Err(Error::ZeroIdeal)));
        assert!(matches!(proj_dim(&z, f(2)), Err(Error::ZeroIdeal)));
        assert!(matches!(regularity(&z, f(2)), Err(Error::ZeroIdeal)));
        assert!(matches!(g_profile(&z, f(2)), Err(Error::ZeroIdeal)));
        assert_eq!(depth(&z, f(2)).unwrap(), 4);
        let r = DepthReport::compute(&z, f(2), Some(f(3))).unwrap();
        assert_eq!((r.depth, r.proj_dim, r.regularity), (4, 0, 0));
    }

    #[test]
    fn projective_dimensions() {
        assert_eq!(proj_dim(&family(6), f(2)).unwrap(), 3);
        assert_eq!(proj_dim(&ideal(2, &[&[1, 2]]), f(2)).unwrap(), 1);
        assert_eq!(
            proj_dim(&ideal(6, &[&[1, 2, 3, 4, 5, 6]]), f(2)).unwrap(),
            1
        );
    }

    #[test]
    fn depths_from_the_family_proof() {
        let i = family(6);
        for p in [2, 3] {
            assert_eq!(depth(&i, f(p)).unwrap(), 3);
            assert_eq!(depth(&i.squarefree_power(2).unwrap(), f(p)).unwrap(), 5);
            assert_eq!(depth(&i.add_variable(3).unwrap(), f(p)).unwrap(), 4);
        }
    }

    #[test]
    fn regularities() {
        assert_eq!(regularity(&ideal(2, &[&[1, 2]]), f(2)).unwrap(), 1);
        assert_eq!(
            regularity(&ideal(6, &[&[1, 2, 3, 4, 5, 6]]), f(2)).unwrap(),
            5
        );
    }

    #[test]
    fn g_profiles() {
        assert_eq!(g_profile(&family(6), f(2)).unwrap().values(), vec![1, 0]);
        let p = g_profile(&family(10), f(2)).unwrap();
        assert_eq!(p.values(), vec![1, 4]);
        assert_eq!(p.violations(), vec![1]);
        assert_eq!(p.max_increase(), Some(3));
        let c = g_profile(&c4(), f(2)).unwrap();
        assert_eq!(c.values(), vec![0, 0]);
        assert_eq!(
            c.profile[1],
            GEntry {
                k: 2,
                d_k: 4,
                depth: 3,
                g: 0
            }
        );
        assert!(c.violations().is_empty());
    }

    #[test]
    fn report_json_shape() {
        let r = DepthReport::compute(&ideal(2, &[&[1, 2]]), f(2), None).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"field_char":2,"betti":[{"i":1,"j":2,"value":1}],"proj_dim":1,"depth":1,"regularity":1,"field_sensitive":false}"#
        );
        let g = g_profile(&ideal(2, &[&[1, 2]]), f(2)).unwrap();
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"nu":1,"profile":[{"k":1,"d_k":2,"depth":1,"g":0}]}"#
        );
    }
}
