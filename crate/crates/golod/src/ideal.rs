//! Monomial ideals as canonical minimal generating sets.
//!
//! Generators are stored minimalized (no generator divides another) and
//! sorted descending by the default lex order, which makes generator-set
//! equality the ideal-equality test.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{parse_monomial, Monomial, MonomialOrderSpec};

/// A monomial ideal, represented by its unique minimal generating set G(I).
///
/// The empty generator set is the zero ideal; the set `{1}` is the unit
/// ideal (improper).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    width: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(width: usize) -> Self {
        MonomialIdeal {
            width,
            generators: Vec::new(),
        }
    }

    pub fn unit(width: usize) -> Self {
        MonomialIdeal {
            width,
            generators: vec![Monomial::unit(width)],
        }
    }

    /// Builds the ideal generated by `gens`, keeping only the
    /// divisibility-minimal elements.
    pub fn from_generators(width: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.width() != width {
                return Err(Error::WidthMismatch(width, g.width()));
            }
        }
        Ok(MonomialIdeal {
            width,
            generators: minimalize(gens),
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// True iff the ideal is different from the whole ring.
    pub fn is_proper(&self) -> bool {
        !self.generators.iter().any(|g| g.is_unit())
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.is_squarefree())
    }

    fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() || !self.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        Ok(())
    }

    fn require_squarefree(&self) -> Result<()> {
        if let Some(g) = self.generators.iter().find(|g| !g.is_squarefree()) {
            return Err(Error::NotSquarefree(g.to_string()));
        }
        Ok(())
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.width() != self.width {
            return Err(Error::WidthMismatch(self.width, m.width()));
        }
        for g in &self.generators {
            if g.divides(m)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The product ideal IJ, minimalized.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.width != other.width {
            return Err(Error::WidthMismatch(self.width, other.width));
        }
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for u in &self.generators {
            for v in &other.generators {
                gens.push(u.mul(v)?);
            }
        }
        MonomialIdeal::from_generators(self.width, gens)
    }

    /// The k-th ordinary power. `power(I, 0)` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Ok(MonomialIdeal::unit(self.width));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Intersection via pairwise lcms, minimalized.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.width != other.width {
            return Err(Error::WidthMismatch(self.width, other.width));
        }
        // Dedup before the quadratic minimalization; lcm sets repeat heavily.
        let mut seen = HashSet::new();
        for u in &self.generators {
            for v in &other.generators {
                seen.insert(u.lcm(v)?);
            }
        }
        MonomialIdeal::from_generators(self.width, seen.into_iter().collect())
    }

    /// Minimal monomial primes of a squarefree proper nonzero ideal.
    pub fn minimal_primes(&self) -> Result<PrimeDecomposition> {
        self.require_proper_nonzero()?;
        self.require_squarefree()?;
        let supports: Vec<Vec<usize>> = self.generators.iter().map(|g| g.support()).collect();
        let mut covers: Vec<Vec<usize>> = Vec::new();
        let mut partial: Vec<usize> = Vec::new();
        hitting_sets(&supports, 0, &mut partial, &mut covers);
        covers.sort();
        covers.dedup();
        // keep inclusion-minimal covers only
        let minimal: Vec<Vec<usize>> = covers
            .iter()
            .filter(|c| {
                !covers
                    .iter()
                    .any(|d| d.len() < c.len() && d.iter().all(|v| c.contains(v)))
            })
            .cloned()
            .collect();
        Ok(PrimeDecomposition {
            width: self.width,
            primes: minimal,
        })
    }

    /// The k-th symbolic power, computed as the iterated intersection of
    /// the k-th powers of the minimal primes.
    pub fn symbolic_power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::NegativePower);
        }
        let decomp = self.minimal_primes()?;
        let mut acc: Option<MonomialIdeal> = None;
        for prime in &decomp.primes {
            let pk = prime_power(prime, k, self.width);
            acc = Some(match acc {
                None => pk,
                Some(a) => a.intersection(&pk)?,
            });
        }
        Ok(acc.expect("proper nonzero ideal has at least one minimal prime"))
    }

    /// Membership oracle for symbolic powers: `m` lies in `I^(k)` iff for
    /// every minimal prime p the exponent sum of `m` over p is at least k.
    pub fn symbolic_membership(&self, m: &Monomial, k: u32) -> Result<bool> {
        if m.width() != self.width {
            return Err(Error::WidthMismatch(self.width, m.width()));
        }
        if k == 0 {
            return Err(Error::NegativePower);
        }
        let decomp = self.minimal_primes()?;
        Ok(decomp.primes.iter().all(|p| {
            p.iter().map(|&v| m.exponent(v) as u64).sum::<u64>() >= k as u64
        }))
    }

    /// Polarization: each generator is split into squarefree variables, with
    /// per-variable budget the max exponent of that variable over G(I).
    pub fn polarize(&self) -> Result<MonomialIdeal> {
        self.require_proper_nonzero()?;
        let budgets = self.polarization_budgets();
        let width: usize = budgets.iter().map(|&b| b as usize).sum();
        let gens = self
            .generators
            .iter()
            .map(|g| g.polarize(&budgets))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::from_generators(width, gens)
    }

    pub fn polarization_budgets(&self) -> Vec<u32> {
        (1..=self.width)
            .map(|v| {
                self.generators
                    .iter()
                    .map(|g| g.exponent(v))
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Keeps exactly the divisibility-minimal elements, sorted canonically.
pub fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut gens: Vec<Monomial> = {
        let set: HashSet<Monomial> = gens.into_iter().collect();
        set.into_iter().collect()
    };
    // ascending degree: a divisor never has larger degree
    gens.sort_by_key(|g| g.degree());
    let mut kept: Vec<Monomial> = Vec::new();
    'outer: for g in gens {
        for k in &kept {
            if k.degree() > g.degree() {
                break;
            }
            if k.divides(&g).expect("equal widths") {
                continue 'outer;
            }
        }
        kept.push(g);
    }
    sort_canonical(&mut kept);
    kept
}

/// Canonical generator order: descending under the default lex order.
fn sort_canonical(gens: &mut [Monomial]) {
    if gens.is_empty() {
        return;
    }
    let ord = MonomialOrderSpec::default_lex(gens[0].width());
    gens.sort_by(|a, b| ord.compare(b, a).expect("equal widths"));
}

fn hitting_sets(
    supports: &[Vec<usize>],
    from: usize,
    partial: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    // first generator not hit by the partial transversal
    let next = supports[from..]
        .iter()
        .position(|s| !s.iter().any(|v| partial.contains(v)));
    match next {
        None => {
            let mut c = partial.clone();
            c.sort();
            out.push(c);
        }
        Some(offset) => {
            let idx = from + offset;
            let support = supports[idx].clone();
            for v in support {
                partial.push(v);
                hitting_sets(supports, idx + 1, partial, out);
                partial.pop();
            }
        }
    }
}

/// All monomials of degree `k` supported on the prime's variables; these are
/// exactly the minimal generators of p^k.
fn prime_power(prime: &[usize], k: u32, width: usize) -> MonomialIdeal {
    let mut gens = Vec::new();
    let mut exps = vec![0u32; prime.len()];
    compositions(k, 0, &mut exps, &mut |exps| {
        let mut e = vec![0u32; width];
        for (i, &v) in prime.iter().enumerate() {
            e[v - 1] = exps[i];
        }
        gens.push(Monomial::from_exponents(e));
    });
    MonomialIdeal {
        width,
        generators: minimalize(gens),
    }
}

fn compositions(remaining: u32, pos: usize, exps: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        emit(exps);
        return;
    }
    for e in 0..=remaining {
        exps[pos] = e;
        compositions(remaining - e, pos + 1, exps, emit);
    }
}

/// Minimal primes of a squarefree monomial ideal, each a set of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeDecomposition {
    width: usize,
    primes: Vec<Vec<usize>>,
}

impl PrimeDecomposition {
    pub fn primes(&self) -> &[Vec<usize>] {
        &self.primes
    }

    pub fn width(&self) -> usize {
        self.width
    }
}

/// Outcome of the squarefree-product criterion: a product IJ is squarefree
/// iff I and J are squarefree and every generator pair is coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquarefreeProductCheck {
    Holds,
    NonSquarefreeGenerator { in_first: bool, generator: Monomial },
    NonCoprimePair { u: Monomial, v: Monomial },
}

impl SquarefreeProductCheck {
    pub fn holds(&self) -> bool {
        matches!(self, SquarefreeProductCheck::Holds)
    }
}

/// Checks whether IJ is squarefree by the generator-level criterion, with a
/// witness on failure.
pub fn squarefree_product_check(
    lhs: &MonomialIdeal,
    rhs: &MonomialIdeal,
) -> Result<SquarefreeProductCheck> {
    if lhs.width() != rhs.width() {
        return Err(Error::WidthMismatch(lhs.width(), rhs.width()));
    }
    lhs.require_proper_nonzero()?;
    rhs.require_proper_nonzero()?;
    for g in lhs.generators() {
        if !g.is_squarefree() {
            return Ok(SquarefreeProductCheck::NonSquarefreeGenerator {
                in_first: true,
                generator: g.clone(),
            });
        }
    }
    for g in rhs.generators() {
        if !g.is_squarefree() {
            return Ok(SquarefreeProductCheck::NonSquarefreeGenerator {
                in_first: false,
                generator: g.clone(),
            });
        }
    }
    for u in lhs.generators() {
        for v in rhs.generators() {
            if !u.is_coprime(v)? {
                return Ok(SquarefreeProductCheck::NonCoprimePair {
                    u: u.clone(),
                    v: v.clone(),
                });
            }
        }
    }
    Ok(SquarefreeProductCheck::Holds)
}

/// Per-k outcome of probing the factorization I^(k) = I^(c) I^(k-c).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicFactorizationReport {
    /// k -> least c with I^(k) = I^(c) I^(k-c), or None when no c works.
    pub least_factor: BTreeMap<u32, Option<u32>>,
}

impl fmt::Display for SymbolicFactorizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in &self.least_factor {
            match c {
                Some(c) => writeln!(f, "k={k}: least c = {c}")?,
                None => writeln!(f, "k={k}: none")?,
            }
        }
        Ok(())
    }
}

/// For each 2 <= k <= kmax, finds the least c < k with
/// I^(k) = I^(c) I^(k-c) as generator sets, or records that none works.
pub fn probe_symbolic_factorization(
    ideal: &MonomialIdeal,
    kmax: u32,
) -> Result<SymbolicFactorizationReport> {
    let symbolic: Vec<MonomialIdeal> = (1..=kmax)
        .map(|k| ideal.symbolic_power(k))
        .collect::<Result<_>>()?;
    let mut least_factor = BTreeMap::new();
    for k in 2..=kmax {
        let target = &symbolic[(k - 1) as usize];
        let mut found = None;
        for c in 1..k {
            let prod = symbolic[(c - 1) as usize].product(&symbolic[(k - c - 1) as usize])?;
            if prod == *target {
                found = Some(c);
                break;
            }
        }
        least_factor.insert(k, found);
    }
    Ok(SymbolicFactorizationReport { least_factor })
}

/// Parses the ideal text format: `ring n=<width>` then one monomial per
/// line; `#` starts a comment.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lines = text
        .lines()
        .map(|l| match l.find('#') {
            Some(i) => l[..i].trim(),
            None => l.trim(),
        })
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty ideal file".into()))?;
    let width: usize = header
        .strip_prefix("ring n=")
        .ok_or_else(|| Error::Parse(format!("expected `ring n=<width>`, got `{header}`")))?
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad width in `{header}`")))?;
    let gens = lines
        .map(|l| parse_monomial(l, width))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::from_generators(width, gens)
}

/// Canonical ideal text: header plus generators in the stored order.
pub fn print_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("ring n={}\n", ideal.width());
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
