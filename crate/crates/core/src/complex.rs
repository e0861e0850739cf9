//! Induced subcomplexes of the Stanley–Reisner complex and their reduced homology.

use crate::ideal::{BitIter, Ideal};
use crate::linalg::{FieldSpec, Matrix};

/// The restriction `Δ_σ` of the Stanley–Reisner complex of an ideal to a vertex set `σ`.
///
/// Faces are the subsets of `σ` containing no generator support.
#[derive(Clone, Debug)]
pub struct InducedComplex {
    vertex_set: u64,
    nonfaces: Vec<u64>,
    /// `faces[s]` holds the faces with `s` vertices, ascending by mask.
    faces: Vec<Vec<u64>>,
}

/// Builds `Δ_σ` for `I`. Bits of `sigma` beyond the ambient ring are ignored.
pub fn induced_faces(ideal: &Ideal, sigma: u64) -> InducedComplex {
    let sigma = sigma & crate::ideal::full_mask(ideal.ambient_n());
    InducedComplex::from_minimal_nonfaces(sigma, ideal.gen_masks())
}

impl InducedComplex {
    /// Complex on `vertex_set` whose faces avoid every mask in `nonfaces`.
    pub fn from_minimal_nonfaces(vertex_set: u64, nonfaces: &[u64]) -> Self {
        let nonfaces: Vec<u64> = nonfaces
            .iter()
            .copied()
            .filter(|&g| g & !vertex_set == 0)
            .collect();
        let verts: Vec<u64> = BitIter(vertex_set).map(|b| 1u64 << b).collect();
        let mut faces = vec![Vec::new(); verts.len() + 1];
        let mut stack = vec![(0u64, 0usize)];
        while let Some((face, next)) = stack.pop() {
            faces[face.count_ones() as usize].push(face);
            for (i, &bit) in verts.iter().enumerate().skip(next) {
                let grown = face | bit;
                if !nonfaces.iter().any(|&g| g & bit != 0 && g & !grown == 0) {
                    stack.push((grown, i + 1));
                }
            }
        }
        for level in &mut faces {
            level.sort_unstable();
        }
        InducedComplex {
            vertex_set,
            nonfaces,
            faces,
        }
    }

    pub fn vertex_set(&self) -> u64 {
        self.vertex_set
    }

    pub fn is_face(&self, tau: u64) -> bool {
        tau & !self.vertex_set == 0 && !self.nonfaces.iter().any(|&g| g & !tau == 0)
    }

    /// Faces with `size` vertices, ascending by mask.
    pub fn faces_of_size(&self, size: usize) -> &[u64] {
        self.faces.get(size).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn faces(&self) -> impl Iterator<Item = u64> + '_ {
        self.faces.iter().flatten().copied()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Inclusion-maximal faces, ascending by mask.
    pub fn facets(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .faces()
            .filter(|&f| BitIter(self.vertex_set & !f).all(|b| !self.is_face(f | (1u64 << b))))
            .collect();
        out.sort_unstable();
        out
    }

    /// Boundary map from faces with `size` vertices to faces with `size - 1`,
    /// one row per source face.
    fn boundary_matrix(&self, size: usize, field: FieldSpec) -> Matrix {
        let src = self.faces_of_size(size);
        let dst = self.faces_of_size(size - 1);
        let mut m = Matrix::zeros(src.len(), dst.len(), field);
        for (r, &face) in src.iter().enumerate() {
            for (pos, b) in BitIter(face).enumerate() {
                let c = dst
                    .binary_search(&(face & !(1u64 << b)))
                    .expect("faces are downward closed");
                m.set(r, c, if pos % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    }
}

/// Dimensions of reduced homology over `field`, entry `d + 1` holding `H̃_d`
/// for `d = -1 ..= |σ| - 1`.
pub fn reduced_homology_dims(complex: &InducedComplex, field: FieldSpec) -> Vec<usize> {
    let top = complex.faces.len() - 1;
    // ranks[s] = rank of the boundary leaving faces of size s
    let mut ranks = vec![0usize; top + 2];
    for (s, rank) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        if complex.faces[s].is_empty() {
            continue;
        }
        *rank = complex.boundary_matrix(s, field).rank();
    }
    (0..=top)
        .map(|s| complex.faces[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}
