//! Labeled chord diagrams: the algebra `A_n` truncated at degree `N`, its
//! semidirect product with `Z[H_n]`, Magnus expansions of combed braids,
//! and the universal invariant `u`.
//!
//! A chord `t_{i,j,gamma}` always has `i < j`; monomials are kept in the
//! ordered basis where first indices never decrease.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::braid_words::{resolve_singular, BraidWord, SingularWord};
use crate::combing::{Combing, FreeBasisWord, KDecomposition};
use crate::coset_split::{h_mul, k_part, phi, HElem};
use crate::error::{Error, Result};
use crate::par;
use crate::surface_group::{SurfElem, Surface};

pub const DEFAULT_DEGREE: usize = 3;
pub const MAX_DEGREE: usize = 4;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Chord {
    pub i: usize,
    pub j: usize,
    pub gamma: SurfElem,
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = if self.gamma.is_identity() { "1".to_string() } else { self.gamma.to_string() };
        write!(f, "t[{},{},{}]", self.i, self.j, g)
    }
}

pub type Monomial = Vec<Chord>;

fn is_ordered(m: &[Chord]) -> bool {
    m.windows(2).all(|w| w[0].i <= w[1].i)
}

/// Integer combination of ordered monomials of degree at most `degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AElem {
    pub degree: usize,
    pub terms: BTreeMap<Monomial, BigInt>,
}

impl AElem {
    pub fn zero(degree: usize) -> AElem {
        AElem { degree, terms: BTreeMap::new() }
    }

    pub fn one(degree: usize) -> AElem {
        let mut x = AElem::zero(degree);
        x.add_term(Vec::new(), BigInt::one());
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == AElem::one(self.degree)
    }

    /// Adds `c . m`, dropping `m` when it is above the truncation degree.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if m.len() > self.degree || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&mut self, other: &AElem, scale: &BigInt) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * scale);
        }
    }

    pub fn graded_part(&self, d: usize) -> AElem {
        AElem {
            degree: self.degree,
            terms: self.terms.iter().filter(|(m, _)| m.len() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }
}

impl fmt::Display for AElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|a, b| monomial_order(a.0, b.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let body = if m.is_empty() { "1".to_string() } else { m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") };
            let neg = c.sign() == num_bigint::Sign::Minus;
            let abs = if neg { -c } else { c.clone() };
            let sep = match (k, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            if abs.is_one() {
                write!(f, "{sep}{body}")?;
            } else {
                write!(f, "{sep}{abs}*{body}")?;
            }
        }
        Ok(())
    }
}

fn monomial_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Elements of `A_n x| Z[H_n]`, keyed by (ordered monomial, group element).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UElem {
    pub degree: usize,
    pub terms: BTreeMap<(Monomial, HElem), BigInt>,
}

impl UElem {
    pub fn zero(degree: usize) -> UElem {
        UElem { degree, terms: BTreeMap::new() }
    }

    pub fn tensor(a: &AElem, h: &HElem) -> UElem {
        UElem {
            degree: a.degree,
            terms: a.terms.iter().map(|(m, c)| ((m.clone(), h.clone()), c.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, other: &UElem, scale: &BigInt) {
        for (k, c) in &other.terms {
            let slot = self.terms.entry(k.clone()).or_insert_with(BigInt::zero);
            *slot += c * scale;
        }
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn graded_part(&self, d: usize) -> UElem {
        UElem {
            degree: self.degree,
            terms: self.terms.iter().filter(|((m, _), _)| m.len() == d).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    /// Lowest degree carrying a nonzero term.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(m, _)| m.len()).min()
    }

    /// The `A_n` coefficient of a group element.
    pub fn component(&self, h: &HElem) -> AElem {
        AElem {
            degree: self.degree,
            terms: self.terms.iter().filter(|((_, k), _)| k == h).map(|((m, _), c)| (m.clone(), c.clone())).collect(),
        }
    }

    fn sorted_terms(&self) -> Vec<(&Monomial, &HElem, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().map(|((m, h), c)| (m, h, c)).collect();
        terms.sort_by(|a, b| monomial_order(a.0, b.0).then_with(|| a.1.cmp(b.1)));
        terms
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, h, c)| {
                let chords: Vec<Value> = m
                    .iter()
                    .map(|x| json!({ "i": x.i, "j": x.j, "gamma": x.gamma.to_string() }))
                    .collect();
                let coeff = match c.to_i64() {
                    Some(v) => json!(v),
                    None => json!(c.to_string()),
                };
                json!({ "coeff": coeff, "chords": chords, "h": h.to_json() })
            })
            .collect();
        json!({ "N": self.degree, "terms": terms })
    }
}

impl fmt::Display for UElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut by_h: BTreeMap<&HElem, AElem> = BTreeMap::new();
        for ((m, h), c) in &self.terms {
            by_h.entry(h).or_insert_with(|| AElem::zero(self.degree)).add_term(m.clone(), c.clone());
        }
        let lines: Vec<String> = by_h.iter().map(|(h, a)| format!("({a}) (x) {h}")).collect();
        f.write_str(&lines.join("\n"))
    }
}

/// Smallest degree at which two invariants differ, up to the lower truncation.
pub fn first_difference(x: &UElem, y: &UElem) -> Option<usize> {
    (0..=x.degree.min(y.degree)).find(|&d| x.graded_part(d).terms != y.graded_part(d).terms)
}

/// Which out-of-order adjacent pair is rewritten first.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum RewriteOrder {
    #[default]
    Leftmost,
    Rightmost,
}

/// Arithmetic in the truncated chord diagram algebra over a fixed surface.
#[derive(Debug, Clone)]
pub struct DiagramAlgebra {
    surf: Arc<Surface>,
    degree: usize,
    order: RewriteOrder,
}

impl DiagramAlgebra {
    pub fn new(surf: Arc<Surface>, degree: usize) -> Result<DiagramAlgebra> {
        if degree > MAX_DEGREE {
            return Err(Error::OutOfRange(format!("truncation degree {degree} exceeds {MAX_DEGREE}")));
        }
        Ok(DiagramAlgebra { surf, degree, order: RewriteOrder::default() })
    }

    pub fn with_order(mut self, order: RewriteOrder) -> DiagramAlgebra {
        self.order = order;
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn surface(&self) -> &Surface {
        &self.surf
    }

    /// `t_{i,j,gamma}` with `t_{i,j,gamma} = t_{j,i,gamma^-1}` applied.
    pub fn chord(&self, i: usize, j: usize, gamma: &SurfElem) -> Result<Chord> {
        match i.cmp(&j) {
            Ordering::Less => Ok(Chord { i, j, gamma: gamma.clone() }),
            Ordering::Greater => Ok(Chord { i: j, j: i, gamma: self.surf.inv(gamma)? }),
            Ordering::Equal => Err(Error::OutOfRange(format!("chord with equal ends {i}"))),
        }
    }

    pub fn one(&self) -> AElem {
        AElem::one(self.degree)
    }

    pub fn monomial(&self, m: Monomial) -> Result<AElem> {
        self.straighten(&m)
    }

    /// Rewrites a monomial into the ordered basis.
    pub fn straighten(&self, m: &[Chord]) -> Result<AElem> {
        let mut out = AElem::zero(self.degree);
        if m.len() <= self.degree {
            self.straighten_into(m.to_vec(), BigInt::one(), &mut out)?;
        }
        Ok(out)
    }

    fn straighten_into(&self, m: Monomial, c: BigInt, out: &mut AElem) -> Result<()> {
        let mut bad = (0..m.len().saturating_sub(1)).filter(|&p| m[p].i > m[p + 1].i);
        let p = match self.order {
            RewriteOrder::Leftmost => bad.next(),
            RewriteOrder::Rightmost => bad.last(),
        };
        let Some(p) = p else {
            out.add_term(m, c);
            return Ok(());
        };
        // m[p] = t_{k,l,delta}, m[p+1] = t_{i,j,gamma} with i < k
        let (left, right) = (&m[p], &m[p + 1]);
        let (k, l, delta) = (left.i, left.j, &left.gamma);
        let (i, j, gamma) = (right.i, right.j, &right.gamma);
        let splice = |pair: [Chord; 2]| -> Monomial {
            let mut w = m[..p].to_vec();
            w.extend(pair);
            w.extend_from_slice(&m[p + 2..]);
            w
        };
        let swapped = splice([right.clone(), left.clone()]);
        if j != k && j != l {
            return self.straighten_into(swapped, c, out);
        }
        let (other, label) = if j == k {
            (l, self.surf.mul(gamma, delta)?)
        } else {
            (k, self.surf.mul(gamma, &self.surf.inv(delta)?)?)
        };
        let extra = Chord { i, j: other, gamma: label };
        self.straighten_into(swapped, c.clone(), out)?;
        self.straighten_into(splice([right.clone(), extra.clone()]), c.clone(), out)?;
        self.straighten_into(splice([extra, right.clone()]), -c, out)
    }

    pub fn a_mul(&self, x: &AElem, y: &AElem) -> Result<AElem> {
        let mut out = AElem::zero(self.degree);
        for (mx, cx) in &x.terms {
            for (my, cy) in &y.terms {
                if mx.len() + my.len() > self.degree {
                    continue;
                }
                let mut m = mx.clone();
                m.extend_from_slice(my);
                let c = cx * cy;
                if is_ordered(&m) {
                    out.add_term(m, c);
                } else {
                    self.straighten_into(m, c, &mut out)?;
                }
            }
        }
        Ok(out)
    }

    /// Conjugation by a section of `h`: endpoints move by the inverse
    /// permutation, then labels pick up the loops at their new ends.
    pub fn h_act(&self, h: &HElem, x: &AElem) -> Result<AElem> {
        let s_inv = h.perm.inverse();
        let mut out = AElem::zero(self.degree);
        for (m, c) in &x.terms {
            let moved = m
                .iter()
                .map(|ch| {
                    let (i, j) = (s_inv.apply(ch.i), s_inv.apply(ch.j));
                    let label = self.surf.mul(&self.surf.mul(&h.loops[i - 1], &ch.gamma)?, &self.surf.inv(&h.loops[j - 1])?)?;
                    self.chord(i, j, &label)
                })
                .collect::<Result<Monomial>>()?;
            self.straighten_into(moved, c.clone(), &mut out)?;
        }
        Ok(out)
    }

    /// `(P (x) h)(Q (x) h') = P h(Q) (x) h h'`.
    pub fn sd_mul(&self, x: &UElem, y: &UElem) -> Result<UElem> {
        let mut out = UElem::zero(self.degree);
        for ((p, h), cp) in &x.terms {
            for ((q, h2), cq) in &y.terms {
                let mut qa = AElem::zero(self.degree);
                qa.add_term(q.clone(), cq.clone());
                let mut pa = AElem::zero(self.degree);
                pa.add_term(p.clone(), cp.clone());
                let prod = self.a_mul(&pa, &self.h_act(h, &qa)?)?;
                out.add(&UElem::tensor(&prod, &h_mul(&self.surf, h, h2)?), &BigInt::one());
            }
        }
        Ok(out)
    }

    /// `1 + t` for a generator, the truncated geometric series for its inverse.
    pub fn magnus_letter(&self, ch: &Chord, sign: i8) -> AElem {
        let mut out = AElem::zero(self.degree);
        if sign > 0 {
            out.add_term(Vec::new(), BigInt::one());
            out.add_term(vec![ch.clone()], BigInt::one());
        } else {
            for k in 0..=self.degree {
                let c = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                out.add_term(vec![ch.clone(); k], c);
            }
        }
        out
    }

    pub fn magnus_v(&self, w: &FreeBasisWord) -> Result<AElem> {
        let mut acc = self.one();
        for x in &w.letters {
            let ch = Chord { i: x.level, j: x.j, gamma: x.gamma.clone() };
            acc = self.a_mul(&acc, &self.magnus_letter(&ch, x.sign))?;
        }
        Ok(acc)
    }

    pub fn v_of(&self, k: &KDecomposition) -> Result<AElem> {
        let mut acc = self.one();
        for part in &k.parts {
            acc = self.a_mul(&acc, &self.magnus_v(part)?)?;
        }
        Ok(acc)
    }
}

/// `u = (v (x) id) o Phi` on braid words, together with its linear extension.
#[derive(Debug)]
pub struct UniversalInvariant {
    combing: Combing,
    alg: DiagramAlgebra,
}

impl UniversalInvariant {
    pub fn new(surf: Arc<Surface>, degree: usize) -> Result<UniversalInvariant> {
        Ok(UniversalInvariant {
            combing: Combing::new(surf.clone()),
            alg: DiagramAlgebra::new(surf, degree)?,
        })
    }

    pub fn with_verification(mut self, verify: bool) -> UniversalInvariant {
        self.combing = self.combing.with_verification(verify);
        self
    }

    pub fn algebra(&self) -> &DiagramAlgebra {
        &self.alg
    }

    pub fn combing(&self) -> &Combing {
        &self.combing
    }

    pub fn degree(&self) -> usize {
        self.alg.degree
    }

    pub fn u_of(&self, w: &BraidWord) -> Result<UElem> {
        let surf = self.alg.surface();
        let h = phi(surf, w)?;
        let k = k_part(surf, w)?;
        let v = self.alg.v_of(&self.combing.decompose(&k)?)?;
        Ok(UElem::tensor(&v, &h))
    }

    /// `sum c . u(w)` over signed words; the branches are evaluated in parallel.
    pub fn u_linear(&self, words: &[(i8, BraidWord)]) -> Result<UElem> {
        let parts = par::map(words, |(c, w)| self.u_of(w).map(|u| (*c, u)));
        let mut out = UElem::zero(self.degree());
        for part in parts {
            let (c, u) = part?;
            out.add(&u, &BigInt::from(c));
        }
        Ok(out)
    }

    pub fn u_singular(&self, w: &SingularWord) -> Result<UElem> {
        self.u_linear(&resolve_singular(w))
    }
}
