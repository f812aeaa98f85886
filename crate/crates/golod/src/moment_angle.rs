//! The bigraded cohomology algebra of the moment-angle complex of a
//! simplicial complex, through its algebraic model: one reduced cohomology
//! group of an induced subcomplex per vertex subset, with a shuffle-signed
//! product that vanishes on overlapping supports.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::golod::BettiTable;
use crate::homology::{
    cohomology_representatives, faces_of_degree, is_coboundary, reduced_cohomology_dims, Cochain,
};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::simplicial::{
    complex_from_squarefree_ideal, join, mask_vertices, shift_ideal, widen_ideal,
    SimplicialComplex, SUBSET_ENUM_CAP,
};

/// A bigraded cohomology class of the moment-angle complex: a cocycle on
/// the induced subcomplex over `sigma`, in cohomological degree `p`.
///
/// Total degree is |sigma| + p + 1; the unit is (empty sigma, p = -1).
#[derive(Clone, Debug, PartialEq)]
pub struct CohomologyClass<F: Field> {
    pub sigma: u32,
    pub p: i32,
    pub representative: Cochain<F>,
}

impl<F: Field> CohomologyClass<F> {
    pub fn total_degree(&self) -> usize {
        (self.sigma.count_ones() as i32 + self.p + 1) as usize
    }

    pub fn unit(field: &F) -> Self {
        CohomologyClass {
            sigma: 0,
            p: -1,
            representative: Cochain {
                degree: -1,
                coeffs: vec![field.one()],
            },
        }
    }
}

/// Multigraded Betti numbers of S/I via the Hochster decomposition:
/// beta_{i, sigma} = dim reduced H^{|sigma| - i - 1} of the induced
/// subcomplex over sigma.
pub fn hochster_betti<F: Field>(ideal: &MonomialIdeal, field: &F) -> Result<BettiTable> {
    if ideal.is_zero() || !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let delta = complex_from_squarefree_ideal(ideal)?;
    let n = delta.ground();
    let mut table = BettiTable::default();
    table
        .entries
        .insert((0, Monomial::unit(ideal.width())), 1);
    for sigma in 1u32..(1 << n) {
        let sub = delta.induced_subcomplex(sigma);
        let dims = reduced_cohomology_dims(&sub, field)?;
        let size = sigma.count_ones() as i32;
        for (p, dim) in dims.nonzero() {
            let i = size - p - 1;
            if i >= 1 {
                let multidegree = Monomial::squarefree(mask_vertices(sigma), n);
                table.entries.insert((i as usize, multidegree), dim);
            }
        }
    }
    Ok(table)
}

/// Basis of the cohomology of the moment-angle complex: one class per
/// cohomology representative of each induced subcomplex, including the
/// unit at (empty, -1). Deterministic: subsets ascend by bitmask, degrees
/// ascend within each subset.
pub fn ma_basis<F: Field>(
    delta: &SimplicialComplex,
    field: &F,
) -> Result<Vec<CohomologyClass<F>>> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = delta.ground();
    if n > SUBSET_ENUM_CAP {
        return Err(Error::GroundTooLarge(n, SUBSET_ENUM_CAP));
    }
    let mut out = Vec::new();
    for sigma in 0u32..(1 << n) {
        let sub = delta.induced_subcomplex(sigma);
        let top = sub.dimension().unwrap_or(-1);
        for p in -1..=top {
            for rep in cohomology_representatives(&sub, p, field)? {
                out.push(CohomologyClass {
                    sigma,
                    p,
                    representative: rep,
                });
            }
        }
    }
    Ok(out)
}

/// Inversion count #{(x, y) in P x Q : x > y} over vertex bitmasks.
fn inversions(p: u32, q: u32) -> u32 {
    let mut count = 0u32;
    for i in 0..32 {
        if p & (1 << i) != 0 {
            // vertices of q strictly below bit i
            count += (q & ((1u32 << i) - 1)).count_ones();
        }
    }
    count
}

/// Sign of the cochain-level product on faces P of Delta_{sigma_a} and Q
/// of Delta_{sigma_b}, transported from the exterior-algebra model where
/// the class for (sigma, S) is the monomial u_{sigma \ S} v_S. Sorting
/// the exterior parts A = sigma_a \ P and B = sigma_b \ Q past each other
/// and past the opposite face contributes the inversion counts; the
/// |A||B| term is the global reordering of the two blocks.
fn koszul_sign(sigma_a: u32, part_a: u32, sigma_b: u32, part_b: u32) -> i64 {
    let ext_a = sigma_a & !part_a;
    let ext_b = sigma_b & !part_b;
    let exponent = inversions(ext_a, ext_b)
        + inversions(ext_a, part_b)
        + inversions(ext_b, part_a)
        + ext_a.count_ones() * ext_b.count_ones();
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product cochain of two classes, on the induced subcomplex over the
/// union of the supports. None when the supports overlap (the model
/// defines those products as zero) or the product cochain vanishes.
pub fn ma_product<F: Field>(
    delta: &SimplicialComplex,
    a: &CohomologyClass<F>,
    b: &CohomologyClass<F>,
    field: &F,
) -> Result<Option<CohomologyClass<F>>> {
    if a.sigma & b.sigma != 0 {
        return Ok(None);
    }
    let sigma = a.sigma | b.sigma;
    let target_degree = a.p + b.p + 1;
    let sub = delta.induced_subcomplex(sigma);
    let target_faces = faces_of_degree(&sub, target_degree)?;
    let a_faces = faces_of_degree(&delta.induced_subcomplex(a.sigma), a.p)?;
    let b_faces = faces_of_degree(&delta.induced_subcomplex(b.sigma), b.p)?;
    let mut coeffs = vec![field.zero(); target_faces.len()];
    let mut any = false;
    for (idx, &face) in target_faces.iter().enumerate() {
        let part_a = face & a.sigma;
        let part_b = face & b.sigma;
        if part_a.count_ones() as i32 != a.p + 1 || part_b.count_ones() as i32 != b.p + 1 {
            continue;
        }
        let (Some(ia), Some(ib)) = (
            a_faces.iter().position(|&f| f == part_a),
            b_faces.iter().position(|&f| f == part_b),
        ) else {
            continue;
        };
        let term = field.mul(&a.representative.coeffs[ia], &b.representative.coeffs[ib]);
        let sign = koszul_sign(a.sigma, part_a, b.sigma, part_b);
        let signed = field.mul(&field.from_i64(sign), &term);
        if !field.is_zero(&signed) {
            any = true;
        }
        coeffs[idx] = signed;
    }
    if !any {
        return Ok(None);
    }
    Ok(Some(CohomologyClass {
        sigma,
        p: target_degree,
        representative: Cochain {
            degree: target_degree,
            coeffs,
        },
    }))
}

/// Whether a class (product cochain) vanishes in cohomology.
pub fn class_is_trivial<F: Field>(
    delta: &SimplicialComplex,
    class: &CohomologyClass<F>,
    field: &F,
) -> Result<bool> {
    let sub = delta.induced_subcomplex(class.sigma);
    Ok(is_coboundary(&sub, &class.representative, field)?.is_some())
}

/// Location of a basis class inside a triviality witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassLocation {
    /// 1-based vertices of sigma.
    pub sigma: Vec<usize>,
    pub p: i32,
}

/// Verdict on the cohomology-ring multiplication of a moment-angle complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialityReport {
    pub verdict: Verdict,
    /// First pair of positive-degree classes with non-vanishing product.
    pub witness: Option<(ClassLocation, ClassLocation)>,
    pub pairs_checked: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Trivial,
    Nontrivial,
}

/// Checks every unordered pair of positive-total-degree basis classes:
/// trivial iff every product cochain is a coboundary in its target.
pub fn check_triviality<F: Field>(delta: &SimplicialComplex, field: &F) -> Result<TrivialityReport> {
    let basis = ma_basis(delta, field)?;
    let positive: Vec<&CohomologyClass<F>> =
        basis.iter().filter(|c| c.total_degree() > 0).collect();
    let mut pairs_checked = 0usize;
    for i in 0..positive.len() {
        for j in i..positive.len() {
            pairs_checked += 1;
            let Some(product) = ma_product(delta, positive[i], positive[j], field)? else {
                continue;
            };
            if !class_is_trivial(delta, &product, field)? {
                return Ok(TrivialityReport {
                    verdict: Verdict::Nontrivial,
                    witness: Some((
                        ClassLocation {
                            sigma: mask_vertices(positive[i].sigma),
                            p: positive[i].p,
                        },
                        ClassLocation {
                            sigma: mask_vertices(positive[j].sigma),
                            p: positive[j].p,
                        },
                    )),
                    pairs_checked,
                });
            }
        }
    }
    Ok(TrivialityReport {
        verdict: Verdict::Trivial,
        witness: None,
        pairs_checked,
    })
}

/// Full pipeline for the join-dual construction: form
/// Gamma = (dual(D1) * dual(D2))^dual, check the product identity
/// I_Gamma = I_{D1} I_{D2}, and test triviality of the moment-angle
/// cohomology multiplication of Gamma.
#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub gamma: SimplicialComplex,
    pub product_identity_holds: bool,
    pub triviality: TrivialityReport,
}

pub fn verify_join_dual_pipeline<F: Field>(
    first: &SimplicialComplex,
    second: &SimplicialComplex,
    field: &F,
) -> Result<PipelineReport> {
    let i1 = first.stanley_reisner_ideal()?;
    let i2 = second.stanley_reisner_ideal()?;
    if i1.is_zero() || !i1.is_proper() || i2.is_zero() || !i2.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let joined = join(&first.alexander_dual()?, &second.alexander_dual()?)?;
    let gamma = joined.complex.alexander_dual()?;
    let product = widen_ideal(&i1, second.ground())
        .product(&shift_ideal(&i2, first.ground()))?;
    let product_identity_holds = gamma.stanley_reisner_ideal()? == product;
    let triviality = check_triviality(&gamma, field)?;
    Ok(PipelineReport {
        gamma,
        product_identity_holds,
        triviality,
    })
}

/// Serializable form of a Betti table: entries {i, sigma, dim}.
#[derive(Clone, Debug, Serialize)]
pub struct BettiEntryJson {
    pub i: usize,
    pub sigma: Vec<usize>,
    pub dim: usize,
}

pub fn betti_table_json(table: &BettiTable) -> Vec<BettiEntryJson> {
    table
        .entries
        .iter()
        .map(|((i, m), &dim)| BettiEntryJson {
            i: *i,
            sigma: m.support(),
            dim,
        })
        .collect()
}

/// JSON triviality report matching the published schema.
#[derive(Clone, Debug, Serialize)]
pub struct TrivialityJson {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<TrivialityWitnessJson>,
    pub pairs_checked: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrivialityWitnessJson {
    pub sigma_a: Vec<usize>,
    pub p_a: i32,
    pub sigma_b: Vec<usize>,
    pub p_b: i32,
}

pub fn triviality_json(report: &TrivialityReport) -> TrivialityJson {
    TrivialityJson {
        verdict: report.verdict,
        witness: report.witness.as_ref().map(|(a, b)| TrivialityWitnessJson {
            sigma_a: a.sigma.clone(),
            p_a: a.p,
            sigma_b: b.sigma.clone(),
            p_b: b.p,
        }),
        pairs_checked: report.pairs_checked,
    }
}
