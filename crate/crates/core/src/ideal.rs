//! Codes as varieties over F₂.
//!
//! A code `C ⊆ F₂ⁿ` is the zero set of exactly one square-free polynomial, the
//! algebraic normal form of the indicator of its complement. The vanishing
//! ideal of `C` is described by its canonical form: the divisibility-minimal
//! pseudo-monomials `∏_{i∈σ} x_i ∏_{j∈τ} (1 + x_j)` vanishing on `C`. Each
//! such element reads as a receptive-field relation `∩_σ U_i ⊆ ∪_τ U_j`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

use crate::bits;
use crate::code::{Code, Codeword};
use crate::error::{Error, Result};

/// Default bound on `n` for operations that walk all of `F₂ⁿ`.
pub const ENUMERATION_LIMIT: usize = 24;

/// Default bound on `n` for [`canonical_form`], which visits all `3ⁿ` pseudo-monomials.
pub const CANONICAL_FORM_LIMIT: usize = 12;

/// A square-free polynomial in `F₂[x₁, …, xₙ]`, stored as its set of monomials.
/// The empty monomial is the constant `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedPolynomial {
    n: usize,
    monomials: BTreeSet<u64>,
}

impl ReducedPolynomial {
    /// Monomials with an even multiplicity cancel.
    pub fn new<I: IntoIterator<Item = u64>>(n: usize, monomials: I) -> Result<Self> {
        let full = bits::full(n);
        let mut set = BTreeSet::new();
        for m in monomials {
            if m & !full != 0 {
                let index = 64 - m.leading_zeros() as usize;
                return Err(Error::IndexOutOfRange { index, n });
            }
            if !set.insert(m) {
                set.remove(&m);
            }
        }
        Ok(ReducedPolynomial { n, monomials: set })
    }

    pub fn zero(n: usize) -> Self {
        ReducedPolynomial {
            n,
            monomials: BTreeSet::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        ReducedPolynomial {
            n,
            monomials: BTreeSet::from([0]),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = u64> + '_ {
        self.monomials.iter().copied()
    }

    /// Value at a point of `F₂ⁿ`.
    pub fn evaluate(&self, w: &Codeword) -> Result<bool> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: w.len(),
            });
        }
        Ok(self.eval_mask(w.mask()))
    }

    fn eval_mask(&self, point: u64) -> bool {
        self.monomials.iter().filter(|&&m| point & m == m).count() % 2 == 1
    }

    /// Monomials ordered by degree, then by index sequence.
    pub fn sorted_monomials(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.monomials.iter().copied().collect();
        v.sort_by(|a, b| bits::size_lex_cmp(*a, *b));
        v
    }
}

impl Add for &ReducedPolynomial {
    type Output = ReducedPolynomial;

    fn add(self, rhs: &ReducedPolynomial) -> ReducedPolynomial {
        assert_eq!(self.n, rhs.n, "adding polynomials in different rings");
        ReducedPolynomial {
            n: self.n,
            monomials: self
                .monomials
                .symmetric_difference(&rhs.monomials)
                .copied()
                .collect(),
        }
    }
}

impl fmt::Display for ReducedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .sorted_monomials()
            .into_iter()
            .map(render_monomial)
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

fn render_monomial(m: u64) -> String {
    if m == 0 {
        return "1".to_string();
    }
    let factors: Vec<String> = bits::indices(m).map(|i| format!("x{i}")).collect();
    factors.join("*")
}

fn check_enumerable(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::CapacityExceeded {
            what: "word length",
            value: n,
            limit,
        });
    }
    Ok(())
}

/// The unique reduced `P` whose zero set is `code`.
///
/// Computed as the binary Möbius transform of the indicator of the complement.
pub fn code_to_polynomial(code: &Code) -> Result<ReducedPolynomial> {
    let n = code.len();
    check_enumerable(n, ENUMERATION_LIMIT)?;
    let size = 1usize << n;
    let mut table = vec![1u8; size];
    for m in code.masks() {
        table[m as usize] = 0;
    }
    for i in 0..n {
        let step = 1usize << i;
        for x in 0..size {
            if x & step != 0 {
                table[x] ^= table[x ^ step];
            }
        }
    }
    Ok(ReducedPolynomial {
        n,
        monomials: (0..size)
            .filter(|&m| table[m] == 1)
            .map(|m| m as u64)
            .collect(),
    })
}

/// Zero set of `p`, found by evaluating at every point of `F₂ⁿ`.
pub fn polynomial_to_code(p: &ReducedPolynomial) -> Result<Code> {
    polynomial_to_code_with_limit(p, ENUMERATION_LIMIT)
}

pub fn polynomial_to_code_with_limit(p: &ReducedPolynomial, limit: usize) -> Result<Code> {
    check_enumerable(p.n, limit)?;
    Code::new(p.n, (0..1u64 << p.n).filter(|&x| !p.eval_mask(x)))
}

/// `∏_{i∈σ} x_i ∏_{j∈τ} (1 + x_j)` with disjoint `σ`, `τ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PseudoMonomial {
    sigma: u64,
    tau: u64,
}

impl PseudoMonomial {
    pub fn new(sigma: u64, tau: u64) -> Result<Self> {
        let overlap = sigma & tau;
        if overlap != 0 {
            return Err(Error::OverlappingFactors {
                index: overlap.trailing_zeros() as usize + 1,
            });
        }
        Ok(PseudoMonomial { sigma, tau })
    }

    pub fn from_indices(sigma: &[usize], tau: &[usize]) -> Result<Self> {
        for &i in sigma.iter().chain(tau) {
            if i == 0 || i > 64 {
                return Err(Error::IndexOutOfRange { index: i, n: 64 });
            }
        }
        Self::new(
            bits::mask_of(sigma.iter().copied()),
            bits::mask_of(tau.iter().copied()),
        )
    }

    pub fn one() -> Self {
        PseudoMonomial { sigma: 0, tau: 0 }
    }

    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    pub fn tau(&self) -> u64 {
        self.tau
    }

    pub fn degree(&self) -> usize {
        bits::size(self.sigma) + bits::size(self.tau)
    }

    /// `self | other` in the divisibility order.
    pub fn divides(&self, other: &PseudoMonomial) -> bool {
        self.sigma & !other.sigma == 0 && self.tau & !other.tau == 0
    }

    /// Value at a point: 1 iff the support contains `σ` and misses `τ`.
    pub fn evaluate_mask(&self, point: u64) -> bool {
        point & self.sigma == self.sigma && point & self.tau == 0
    }

    /// True iff the pseudo-monomial is zero at every codeword. Indices beyond
    /// the code length read as zero coordinates.
    pub fn vanishes_on(&self, code: &Code) -> bool {
        code.masks().all(|w| !self.evaluate_mask(w))
    }

    /// The order used for canonical-form output: degree, then `σ`, then `τ`.
    pub fn canonical_cmp(&self, other: &PseudoMonomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| bits::lex_cmp(self.sigma, other.sigma))
            .then_with(|| bits::lex_cmp(self.tau, other.tau))
    }
}

impl fmt::Display for PseudoMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sigma == 0 && self.tau == 0 {
            return f.write_str("1");
        }
        let factors: Vec<String> = bits::indices(self.sigma)
            .map(|i| format!("x{i}"))
            .chain(bits::indices(self.tau).map(|j| format!("(1+x{j})")))
            .collect();
        f.write_str(&factors.join("*"))
    }
}

/// Canonical form of the vanishing ideal of a nonempty code with `n ≤` [`CANONICAL_FORM_LIMIT`].
pub fn canonical_form(code: &Code) -> Result<Vec<PseudoMonomial>> {
    canonical_form_with_limit(code, CANONICAL_FORM_LIMIT)
}

/// Visits every pseudo-monomial as a ternary pattern (digit 0: factor
/// `1+x_i`, digit 1: factor `x_i`, digit 2: no factor) and counts the
/// codewords on which it is 1. A pattern with a free digit `i` splits into
/// its two completions, which have smaller ternary value, so one pass in
/// increasing order fills the table.
pub fn canonical_form_with_limit(code: &Code, limit: usize) -> Result<Vec<PseudoMonomial>> {
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    let n = code.len();
    if n > limit {
        return Err(Error::CapacityExceeded {
            what: "word length",
            value: n,
            limit,
        });
    }
    let pow3: Vec<usize> = (0..=n).map(|k| 3usize.pow(k as u32)).collect();
    let total = pow3[n];
    let mut hits = vec![0u32; total];
    let mut digits = vec![0u8; n];
    for p in 0..total {
        if p > 0 {
            increment_ternary(&mut digits);
        }
        hits[p] = match digits.iter().position(|&d| d == 2) {
            Some(i) => hits[p - 2 * pow3[i]] + hits[p - pow3[i]],
            None => {
                let mask = digits
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d == 1)
                    .fold(0u64, |m, (i, _)| m | 1 << i);
                u32::from(code.contains_mask(mask))
            }
        };
    }

    let mut out = Vec::new();
    digits.iter_mut().for_each(|d| *d = 0);
    for p in 0..total {
        if p > 0 {
            increment_ternary(&mut digits);
        }
        if hits[p] != 0 {
            continue;
        }
        let minimal = digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 2)
            .all(|(i, &d)| hits[p + (2 - d as usize) * pow3[i]] != 0);
        if minimal {
            let (mut sigma, mut tau) = (0u64, 0u64);
            for (i, &d) in digits.iter().enumerate() {
                match d {
                    0 => tau |= 1 << i,
                    1 => sigma |= 1 << i,
                    _ => {}
                }
            }
            out.push(PseudoMonomial { sigma, tau });
        }
    }
    out.sort_by(PseudoMonomial::canonical_cmp);
    Ok(out)
}

fn increment_ternary(digits: &mut [u8]) {
    for d in digits.iter_mut() {
        if *d < 2 {
            *d += 1;
            return;
        }
        *d = 0;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    /// `∩_σ U_i ⊆ ∪_τ U_j` with both sides nonempty.
    Containment,
    /// `∩_σ U_i = ∅`.
    EmptyIntersection,
    /// `X ⊆ ∪_τ U_j`.
    Covering,
}

/// A receptive-field relation read off one canonical-form element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RfRelation {
    pub sigma: u64,
    pub tau: u64,
    pub kind: RelationKind,
}

impl RfRelation {
    pub fn from_pseudo_monomial(z: &PseudoMonomial) -> Self {
        let kind = if z.tau == 0 {
            RelationKind::EmptyIntersection
        } else if z.sigma == 0 {
            RelationKind::Covering
        } else {
            RelationKind::Containment
        };
        RfRelation {
            sigma: z.sigma,
            tau: z.tau,
            kind,
        }
    }
}

fn join_sets(mask: u64, op: &str) -> String {
    let parts: Vec<String> = bits::indices(mask).map(|i| format!("U{i}")).collect();
    parts.join(op)
}

impl fmt::Display for RfRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RelationKind::EmptyIntersection => write!(f, "{} = ∅", join_sets(self.sigma, " ∩ ")),
            RelationKind::Covering => write!(f, "X ⊆ {}", join_sets(self.tau, " ∪ ")),
            RelationKind::Containment => write!(
                f,
                "{} ⊆ {}",
                join_sets(self.sigma, " ∩ "),
                join_sets(self.tau, " ∪ ")
            ),
        }
    }
}

/// One relation per canonical-form element, in canonical-form order.
pub fn rf_relations(code: &Code) -> Result<Vec<RfRelation>> {
    Ok(canonical_form(code)?
        .iter()
        .map(RfRelation::from_pseudo_monomial)
        .collect())
}
