//! Reduced simplicial cohomology over an exact field.
//!
//! The reduced complex always materializes the empty face at degree -1,
//! so the irrelevant complex has one-dimensional cohomology there. Faces
//! at degree p are the faces with p+1 vertices, sorted ascending by
//! bitmask, which fixes every matrix and representative deterministically.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Echelon, Matrix};
use crate::simplicial::SimplicialComplex;

/// A p-cochain: one coefficient per p-face (sorted ascending by bitmask).
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<F: Field> {
    pub degree: i32,
    pub coeffs: Vec<F::Elem>,
}

impl<F: Field> Cochain<F> {
    pub fn zero(field: &F, degree: i32, len: usize) -> Self {
        Cochain {
            degree,
            coeffs: vec![field.zero(); len],
        }
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.coeffs.iter().all(|c| field.is_zero(c))
    }
}

/// Faces of the complex with `p + 1` vertices, ascending by bitmask.
pub fn faces_of_degree(complex: &SimplicialComplex, p: i32) -> Result<Vec<u32>> {
    if p < -1 {
        return Ok(Vec::new());
    }
    let size = (p + 1) as u32;
    Ok(complex
        .faces()?
        .into_iter()
        .filter(|f| f.count_ones() == size)
        .collect())
}

/// Sign of inserting the extra vertex of `sup` over `sub`: (-1)^position
/// within the sorted vertex list of `sup`.
fn incidence_sign(sub: u32, sup: u32) -> i64 {
    let extra = sup & !sub;
    debug_assert_eq!(extra.count_ones(), 1);
    let below = (sup & (extra - 1)).count_ones();
    if below % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Matrix of the reduced coboundary C^p -> C^{p+1}; rows are (p+1)-faces,
/// columns are p-faces.
pub fn coboundary_matrix<F: Field>(
    complex: &SimplicialComplex,
    p: i32,
    field: &F,
) -> Result<Matrix<F>> {
    let domain = faces_of_degree(complex, p)?;
    let codomain = faces_of_degree(complex, p + 1)?;
    let mut m = Matrix::zero(field, codomain.len(), domain.len());
    for (r, &g) in codomain.iter().enumerate() {
        for (c, &f) in domain.iter().enumerate() {
            if f & !g == 0 && (g & !f).count_ones() == 1 {
                m.data[r][c] = field.from_i64(incidence_sign(f, g));
            }
        }
    }
    Ok(m)
}

/// Reduced cohomology dimensions indexed from degree -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyDims {
    dims: Vec<usize>,
}

impl CohomologyDims {
    /// Dimension of reduced H^p; zero outside the stored range.
    pub fn get(&self, p: i32) -> usize {
        if p < -1 {
            return 0;
        }
        self.dims.get((p + 1) as usize).copied().unwrap_or(0)
    }

    /// (degree, dim) pairs for the nonzero degrees.
    pub fn nonzero(&self) -> Vec<(i32, usize)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, &d)| (i as i32 - 1, d))
            .collect()
    }
}

/// All reduced cohomology dimensions of the complex, exactly.
pub fn reduced_cohomology_dims<F: Field>(
    complex: &SimplicialComplex,
    field: &F,
) -> Result<CohomologyDims> {
    let top = complex.dimension().unwrap_or(-1);
    let mut dims = Vec::new();
    let mut prev_rank = 0usize;
    for p in -1..=top {
        let cochains = faces_of_degree(complex, p)?.len();
        let delta = coboundary_matrix(complex, p, field)?;
        let rank = delta.rank(field);
        dims.push(cochains - rank - prev_rank);
        prev_rank = rank;
    }
    Ok(CohomologyDims { dims })
}

/// Cocycles whose classes form a basis of reduced H^p, deterministic for
/// the fixed face ordering and pivoting rule.
pub fn cohomology_representatives<F: Field>(
    complex: &SimplicialComplex,
    p: i32,
    field: &F,
) -> Result<Vec<Cochain<F>>> {
    let domain = faces_of_degree(complex, p)?;
    if domain.is_empty() {
        return Ok(Vec::new());
    }
    let delta = coboundary_matrix(complex, p, field)?;
    let kernel = delta.kernel_basis(field);
    // seed the echelon with the image of the previous coboundary
    let below = coboundary_matrix(complex, p - 1, field)?;
    let mut ech = Echelon::new(field.clone(), domain.len());
    for c in 0..below.cols {
        let column: Vec<F::Elem> = (0..below.rows).map(|r| below.data[r][c].clone()).collect();
        ech.insert(column);
    }
    let mut reps = Vec::new();
    for v in kernel {
        if ech.insert(v.clone()) {
            reps.push(Cochain {
                degree: p,
                coeffs: v,
            });
        }
    }
    Ok(reps)
}

/// Decides whether the cocycle is a coboundary, with a preimage witness.
/// Rejects non-cocycles.
pub fn is_coboundary<F: Field>(
    complex: &SimplicialComplex,
    cochain: &Cochain<F>,
    field: &F,
) -> Result<Option<Vec<F::Elem>>> {
    let delta = coboundary_matrix(complex, cochain.degree, field)?;
    assert_eq!(delta.cols, cochain.coeffs.len(), "cochain length mismatch");
    if !delta
        .apply(field, &cochain.coeffs)
        .iter()
        .all(|e| field.is_zero(e))
    {
        return Err(Error::NotCocycle);
    }
    let below = coboundary_matrix(complex, cochain.degree - 1, field)?;
    Ok(below.solve(field, &cochain.coeffs))
}
