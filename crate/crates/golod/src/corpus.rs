//! Seeded random corpora of ideals and complexes for property suites and
//! batch studies. Identical seeds give identical corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::simplicial::SimplicialComplex;

pub type CorpusRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bounds for random ideal generation. Defaults keep acceptance runs fast.
#[derive(Clone, Copy, Debug)]
pub struct IdealParams {
    pub width: usize,
    pub max_generators: usize,
    pub max_degree: u32,
    pub squarefree: bool,
}

impl Default for IdealParams {
    fn default() -> Self {
        IdealParams {
            width: 6,
            max_generators: 6,
            max_degree: 3,
            squarefree: false,
        }
    }
}

/// A random proper nonzero monomial ideal within the bounds.
pub fn random_ideal(rng: &mut CorpusRng, params: &IdealParams) -> MonomialIdeal {
    loop {
        let count = rng.gen_range(1..=params.max_generators);
        let gens: Vec<Monomial> = (0..count)
            .map(|_| random_monomial(rng, params))
            .collect();
        let ideal = MonomialIdeal::from_generators(params.width, gens).expect("widths agree");
        if !ideal.is_zero() && ideal.is_proper() {
            return ideal;
        }
    }
}

fn random_monomial(rng: &mut CorpusRng, params: &IdealParams) -> Monomial {
    loop {
        let degree = rng.gen_range(1..=params.max_degree);
        let mut exponents = vec![0u32; params.width];
        for _ in 0..degree {
            let var = rng.gen_range(0..params.width);
            exponents[var] += 1;
        }
        let m = Monomial::from_exponents(exponents);
        if !params.squarefree || m.is_squarefree() {
            return m;
        }
    }
}

/// A random non-void complex on `[n]` whose Stanley-Reisner ideal is
/// proper and nonzero: neither void nor the full simplex.
pub fn random_complex(rng: &mut CorpusRng, n: usize) -> SimplicialComplex {
    assert!(n >= 1);
    loop {
        let facet_count = rng.gen_range(1..=n.max(2));
        let facets: Vec<u32> = (0..facet_count)
            .map(|_| rng.gen_range(0..(1u32 << n)))
            .collect();
        let complex = SimplicialComplex::from_faces(n, facets).expect("vertices in range");
        let full = (1u32 << n) - 1;
        if !complex.is_void() && !complex.is_face(full) {
            return complex;
        }
    }
}

/// A random complex allowing the full simplex and the irrelevant complex,
/// for identities that hold unconditionally.
pub fn random_any_complex(rng: &mut CorpusRng, n: usize) -> SimplicialComplex {
    let facet_count = rng.gen_range(0..=n.max(2));
    let facets: Vec<u32> = (0..facet_count)
        .map(|_| rng.gen_range(0..(1u32 << n)))
        .collect();
    SimplicialComplex::from_faces(n, facets).expect("vertices in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpora_are_reproducible() {
        let params = IdealParams::default();
        let a: Vec<_> = {
            let mut rng = rng_from_seed(42);
            (0..10).map(|_| random_ideal(&mut rng, &params)).collect()
        };
        let b: Vec<_> = {
            let mut rng = rng_from_seed(42);
            (0..10).map(|_| random_ideal(&mut rng, &params)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn random_ideals_respect_bounds() {
        let params = IdealParams {
            width: 4,
            max_generators: 3,
            max_degree: 2,
            squarefree: true,
        };
        let mut rng = rng_from_seed(1);
        for _ in 0..50 {
            let i = random_ideal(&mut rng, &params);
            assert!(i.is_proper() && !i.is_zero());
            assert!(i.generators().len() <= 3);
            assert!(i.is_squarefree());
            assert!(i.generators().iter().all(|g| g.degree() <= 2));
        }
    }

    #[test]
    fn random_complexes_have_proper_nonzero_sr_ideals() {
        let mut rng = rng_from_seed(2);
        for _ in 0..50 {
            let c = random_complex(&mut rng, 4);
            let i = c.stanley_reisner_ideal().unwrap();
            assert!(i.is_proper() && !i.is_zero());
        }
    }
}
