//! Simplicial complexes on a declared ground set `[n]`, with the
//! Stanley-Reisner correspondence, Alexander duality, joins, and induced
//! subcomplexes.
//!
//! Faces are bitmasks over the ground set; vertex `i` (1-based) is bit
//! `i - 1`. The ground size is declared, not inferred: ghost vertices are
//! legal and matter for duality and Stanley-Reisner widths.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Hard cap on ground sizes for full subset enumerations.
pub const SUBSET_ENUM_CAP: usize = 16;

/// A simplicial complex given by its facets (inclusion-maximal faces).
///
/// No facets is the void complex (no faces at all); the single facet `{}`
/// is the irrelevant complex whose only face is the empty set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    pub fn void(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![0],
        }
    }

    pub fn full_simplex(ground: usize) -> Self {
        assert!(ground < 32);
        SimplicialComplex {
            ground,
            facets: vec![(1u32 << ground) - 1],
        }
    }

    /// Builds a complex from any set of faces, keeping the maximal ones.
    pub fn from_faces(ground: usize, faces: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut faces: Vec<u32> = faces.into_iter().collect();
        if ground >= 32 {
            return Err(Error::GroundTooLarge(ground, 31));
        }
        let full = (1u32 << ground) - 1;
        for &f in &faces {
            if f & !full != 0 {
                let v = 32 - (f & !full).leading_zeros() as usize;
                return Err(Error::VertexOutOfRange(v, ground));
            }
        }
        faces.sort();
        faces.dedup();
        let facets: Vec<u32> = faces
            .iter()
            .filter(|&&f| !faces.iter().any(|&g| g != f && g & f == f))
            .copied()
            .collect();
        Ok(SimplicialComplex { ground, facets })
    }

    /// Builds a complex from facet vertex lists (1-based).
    pub fn from_facet_lists(ground: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut mask = 0u32;
            for &v in facet {
                if v < 1 || v > ground {
                    return Err(Error::VertexOutOfRange(v, ground));
                }
                mask |= 1 << (v - 1);
            }
            masks.push(mask);
        }
        SimplicialComplex::from_faces(ground, masks)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[u32] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, face: u32) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// All faces, ascending by bitmask value. Empty for the void complex.
    pub fn faces(&self) -> Result<Vec<u32>> {
        if self.ground > SUBSET_ENUM_CAP {
            return Err(Error::GroundTooLarge(self.ground, SUBSET_ENUM_CAP));
        }
        let mut out = Vec::new();
        for mask in 0..(1u32 << self.ground) {
            if self.is_face(mask) {
                out.push(mask);
            }
        }
        Ok(out)
    }

    /// Dimension of the complex: largest facet size minus one. The
    /// irrelevant complex has dimension -1; the void complex has none.
    pub fn dimension(&self) -> Option<i32> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i32 - 1)
            .max()
    }

    /// All minimal non-faces: subsets outside the complex whose proper
    /// subsets are all faces. Rejects the void complex.
    pub fn minimal_nonfaces(&self) -> Result<Vec<u32>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        if self.ground > SUBSET_ENUM_CAP {
            return Err(Error::GroundTooLarge(self.ground, SUBSET_ENUM_CAP));
        }
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << self.ground) {
            if self.is_face(mask) {
                continue;
            }
            let all_proper_subsets_are_faces = (0..self.ground)
                .filter(|&i| mask & (1 << i) != 0)
                .all(|i| self.is_face(mask & !(1 << i)));
            if all_proper_subsets_are_faces {
                out.push(mask);
            }
        }
        Ok(out)
    }

    /// The Stanley-Reisner ideal, generated by the monomials of the
    /// minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> Result<MonomialIdeal> {
        let gens = self
            .minimal_nonfaces()?
            .into_iter()
            .map(|mask| Monomial::squarefree(mask_vertices(mask), self.ground))
            .collect();
        MonomialIdeal::from_generators(self.ground, gens)
    }

    /// The Alexander dual: faces are the subsets whose complement is not a
    /// face of `self`.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        if self.ground > SUBSET_ENUM_CAP {
            return Err(Error::GroundTooLarge(self.ground, SUBSET_ENUM_CAP));
        }
        let full = (1u32 << self.ground) - 1;
        let faces = (0..=full).filter(|&mask| !self.is_face(full & !mask));
        SimplicialComplex::from_faces(self.ground, faces)
    }

    /// Faces of `self` contained in `sigma`, kept on the ambient ground.
    pub fn induced_subcomplex(&self, sigma: u32) -> SimplicialComplex {
        let mut faces: Vec<u32> = self.facets.iter().map(|&f| f & sigma).collect();
        faces.sort();
        faces.dedup();
        let facets: Vec<u32> = faces
            .iter()
            .filter(|&&f| !faces.iter().any(|&g| g != f && g & f == f))
            .copied()
            .collect();
        SimplicialComplex {
            ground: self.ground,
            facets,
        }
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Complex[n={}; ", self.ground)?;
        for (i, &facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{{")?;
            for (j, v) in mask_vertices(facet).into_iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "]")
    }
}

/// 1-based vertices of a bitmask, ascending.
pub fn mask_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

/// The unique complex whose Stanley-Reisner ideal is the given squarefree
/// proper ideal: faces are the subsets whose monomial lies outside it.
pub fn complex_from_squarefree_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_squarefree()) {
        return Err(Error::NotSquarefree(g.to_string()));
    }
    let n = ideal.width();
    if n > SUBSET_ENUM_CAP {
        return Err(Error::GroundTooLarge(n, SUBSET_ENUM_CAP));
    }
    let mut faces = Vec::new();
    for mask in 0..(1u32 << n) {
        let m = Monomial::squarefree(mask_vertices(mask), n);
        if !ideal.contains(&m)? {
            faces.push(mask);
        }
    }
    SimplicialComplex::from_faces(n, faces)
}

/// Result of a join: the complex on the disjoint union of the grounds,
/// with the second factor's vertices shifted by the first ground's size.
pub struct JoinResult {
    pub complex: SimplicialComplex,
    /// (original vertex in the second factor) -> vertex in the join.
    pub second_factor_offset: usize,
}

/// Join of two complexes on disjoint ground sets. Vertices of `second` are
/// relabeled by adding `first.ground()`.
pub fn join(first: &SimplicialComplex, second: &SimplicialComplex) -> Result<JoinResult> {
    let offset = first.ground();
    let ground = offset + second.ground();
    if ground >= 32 {
        return Err(Error::GroundTooLarge(ground, 31));
    }
    let mut facets = Vec::new();
    for &f1 in first.facets() {
        for &f2 in second.facets() {
            facets.push(f1 | (f2 << offset));
        }
    }
    Ok(JoinResult {
        complex: SimplicialComplex::from_faces(ground, facets)?,
        second_factor_offset: offset,
    })
}

/// Widens an ideal on `[n]` to `[n + extra]` without moving variables.
pub fn widen_ideal(ideal: &MonomialIdeal, extra: usize) -> MonomialIdeal {
    let width = ideal.width() + extra;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            e.resize(width, 0);
            Monomial::from_exponents(e)
        })
        .collect();
    MonomialIdeal::from_generators(width, gens).expect("widths agree")
}

/// Shifts an ideal's variables up by `offset` into a ring of the same
/// total width plus offset.
pub fn shift_ideal(ideal: &MonomialIdeal, offset: usize) -> MonomialIdeal {
    let width = ideal.width() + offset;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut e = vec![0u32; offset];
            e.extend_from_slice(g.exponents());
            Monomial::from_exponents(e)
        })
        .collect();
    MonomialIdeal::from_generators(width, gens).expect("widths agree")
}

/// Parses the complex text format: `vertices <n>` then `facet v1 v2 ...`
/// lines; a bare `facet` is the empty facet; no facet lines is the void
/// complex. `#` starts a comment.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = text
        .lines()
        .map(|l| match l.find('#') {
            Some(i) => l[..i].trim(),
            None => l.trim(),
        })
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty complex file".into()))?;
    let ground: usize = header
        .strip_prefix("vertices ")
        .ok_or_else(|| Error::Parse(format!("expected `vertices <n>`, got `{header}`")))?
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count in `{header}`")))?;
    let mut facets = Vec::new();
    for line in lines {
        let rest = line
            .strip_prefix("facet")
            .ok_or_else(|| Error::Parse(format!("expected `facet ...`, got `{line}`")))?;
        let verts = rest
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad vertex `{t}`")))
            })
            .collect::<Result<Vec<usize>>>()?;
        facets.push(verts);
    }
    SimplicialComplex::from_facet_lists(ground, &facets)
}

/// Canonical complex text, re-parsable by `parse_complex`.
pub fn print_complex(complex: &SimplicialComplex) -> String {
    let mut out = format!("vertices {}\n", complex.ground());
    for &facet in complex.facets() {
        out.push_str("facet");
        for v in mask_vertices(facet) {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}
