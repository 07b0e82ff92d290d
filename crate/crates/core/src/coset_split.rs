//! The projection `phi: B_n(M) -> H_n = pi_1(M)^n x| S_n`, a set-section
//! back, and the kernel part `w . section(phi(w))^-1`.

use std::fmt;

use serde_json::{json, Value};

use crate::braid_words::{concat, invert_word, Ambient, BraidWord, Gen, Letter, Permutation};
use crate::error::{Error, Result};
use crate::surface_group::{parse_surf_word, SurfElem, SurfLetter, Surface};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HElem {
    pub loops: Vec<SurfElem>,
    pub perm: Permutation,
}

impl HElem {
    pub fn identity(n: usize) -> HElem {
        HElem {
            loops: vec![SurfElem::identity(); n],
            perm: Permutation::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.loops.len()
    }

    pub fn is_identity(&self) -> bool {
        self.loops.iter().all(SurfElem::is_identity) && self.perm.is_identity()
    }

    pub fn to_json(&self) -> Value {
        let loops: Vec<String> = self.loops.iter().map(|l| l.to_string()).collect();
        json!({ "loops": loops, "perm": self.perm.images() })
    }

    pub fn from_json(surf: &Surface, v: &Value) -> Result<HElem> {
        let bad = |what: &str| Error::Syntax {
            token: v.to_string(),
            reason: what.to_string(),
        };
        let loops = v["loops"].as_array().ok_or_else(|| bad("missing loops"))?;
        let loops = loops
            .iter()
            .map(|s| {
                let s = s.as_str().ok_or_else(|| bad("loop is not a string"))?;
                surf.normal_form(&parse_surf_word(s, surf.genus())?)
            })
            .collect::<Result<Vec<_>>>()?;
        let images = v["perm"].as_array().ok_or_else(|| bad("missing perm"))?;
        let images = images
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("perm entry")))
            .collect::<Result<Vec<_>>>()?;
        if images.len() != loops.len() {
            return Err(bad("loops and perm differ in length"));
        }
        Ok(HElem { loops, perm: Permutation::from_images(&images)? })
    }
}

impl fmt::Display for HElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let loops: Vec<String> = self
            .loops
            .iter()
            .map(|l| if l.is_identity() { "1".to_string() } else { l.to_string() })
            .collect();
        write!(f, "(({}), {:?})", loops.join(", "), self.perm.images())
    }
}

fn check_same(x: &HElem, y: &HElem) -> Result<()> {
    if x.n() == y.n() {
        Ok(())
    } else {
        Err(Error::AmbientMismatch(format!("H_{} vs H_{}", x.n(), y.n())))
    }
}

/// `(mu, s)(nu, t) = (i -> mu_i nu_{s(i)}, s then t)`.
pub fn h_mul(surf: &Surface, x: &HElem, y: &HElem) -> Result<HElem> {
    check_same(x, y)?;
    let loops = x
        .loops
        .iter()
        .enumerate()
        .map(|(i, mu)| surf.mul(mu, &y.loops[x.perm.apply(i + 1) - 1]))
        .collect::<Result<_>>()?;
    Ok(HElem { loops, perm: x.perm.then(&y.perm) })
}

pub fn h_inv(surf: &Surface, x: &HElem) -> Result<HElem> {
    let s_inv = x.perm.inverse();
    let loops = (1..=x.n())
        .map(|j| surf.inv(&x.loops[s_inv.apply(j) - 1]))
        .collect::<Result<_>>()?;
    Ok(HElem { loops, perm: s_inv })
}

pub fn letter_phi(surf: &Surface, n: usize, l: Letter) -> Result<HElem> {
    let mut h = HElem::identity(n);
    match l.gen {
        Gen::A { i, r } => h.loops[i - 1] = surf.letter_elem(SurfLetter::new(r, l.sign))?,
        Gen::Sigma(j) => h.perm = Permutation::transposition(n, j),
        Gen::Tlow(..) | Gen::Tup(..) => {}
    }
    Ok(h)
}

pub fn phi(surf: &Surface, w: &BraidWord) -> Result<HElem> {
    check_genus(surf, w.amb)?;
    let n = w.amb.n;
    w.letters
        .iter()
        .try_fold(HElem::identity(n), |acc, &l| h_mul(surf, &acc, &letter_phi(surf, n, l)?))
}

fn check_genus(surf: &Surface, amb: Ambient) -> Result<()> {
    if surf.genus() == amb.g {
        Ok(())
    } else {
        Err(Error::AmbientMismatch(format!("surface genus {} vs word genus {}", surf.genus(), amb.g)))
    }
}

/// Positive permutation braid of `s`, found by repeatedly undoing the leftmost
/// adjacent pair of positions whose strands are out of order.
pub fn permutation_braid(s: &Permutation) -> Vec<Letter> {
    let n = s.len();
    let mut cur = s.clone();
    let mut js = Vec::new();
    while !cur.is_identity() {
        let inv = cur.inverse();
        let j = (1..n).find(|&j| inv.apply(j) > inv.apply(j + 1)).expect("non-identity has a descent");
        js.push(j);
        cur = cur.then(&Permutation::transposition(n, j));
    }
    js.into_iter().rev().map(Letter::sigma).collect()
}

pub fn section(surf: &Surface, h: &HElem) -> Result<BraidWord> {
    let amb = Ambient::new(h.n(), surf.genus());
    let mut letters = Vec::new();
    for (i, mu) in h.loops.iter().enumerate() {
        letters.extend(mu.word().iter().map(|l| Letter::a(i + 1, l.index()).pow(l.sign())));
    }
    letters.extend(permutation_braid(&h.perm));
    let w = BraidWord { amb, letters };
    if phi(surf, &w)? != *h {
        return Err(Error::Inconsistent(format!("section of {h} does not project back")));
    }
    Ok(w)
}

/// `w . section(phi(w))^-1`, an element of the kernel of `phi`.
pub fn k_part(surf: &Surface, w: &BraidWord) -> Result<BraidWord> {
    let s = section(surf, &phi(surf, w)?)?;
    let k = concat(w, &invert_word(&s))?;
    if !phi(surf, &k)?.is_identity() {
        return Err(Error::Inconsistent(format!("kernel part of {w} has nontrivial projection")));
    }
    Ok(k)
}
