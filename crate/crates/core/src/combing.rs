//! Combing: an element of the kernel `K_n` of `phi` is written as
//! `k_1 k_2 .. k_{n-1}`, each `k_i` a reduced word in the free generators
//! `f_{i,j,gamma} = gamma~ t_{i,j} gamma~^-1` of level `i`.
//!
//! Strand-1 words of an `m`-strand frame live in the free group `F1` on
//! `a_{1,1} .. a_{1,2g}` and `T_{1,2} .. T_{1,m-1}`; there `T_{1,m}` is the
//! surface relator. Letters on the other strands act on `F1` by conjugation.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::braid_words::{
    invert_letters, permutation_of, sigma_conj_letter, Ambient, BraidWord, Gen, Letter, Permutation,
};
use crate::coset_split::{permutation_braid, phi};
use crate::error::{Error, Result};
use crate::free_group::{self, Automorphism, FreeWord};
use crate::surface_group::{SurfElem, SurfLetter, Surface};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FreeGenLetter {
    pub level: usize,
    pub j: usize,
    pub gamma: SurfElem,
    pub sign: i8,
}

impl FreeGenLetter {
    pub fn inverse(&self) -> FreeGenLetter {
        FreeGenLetter { sign: -self.sign, ..self.clone() }
    }
}

impl fmt::Display for FreeGenLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f[{},{},\"{}\"]^{}", self.level, self.j, self.gamma, self.sign)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeBasisWord {
    pub level: usize,
    pub letters: Vec<FreeGenLetter>,
}

impl FreeBasisWord {
    fn push(&mut self, x: FreeGenLetter) {
        match self.letters.last() {
            Some(last) if *last == x.inverse() => {
                self.letters.pop();
            }
            _ => self.letters.push(x),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KDecomposition {
    pub amb: Ambient,
    pub parts: Vec<FreeBasisWord>,
}

impl fmt::Display for KDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "level {}:", part.level)?;
            for x in &part.letters {
                write!(f, " {x}")?;
            }
        }
        Ok(())
    }
}

/// The level-one free group of an `m`-strand frame.
#[derive(Clone, Copy, Debug)]
struct Frame {
    m: usize,
    g: usize,
}

impl Frame {
    fn rank(self) -> usize {
        2 * self.g + self.m - 2
    }

    fn b(self, s: usize) -> FreeWord {
        vec![if s % 2 == 1 { s as i32 } else { -(s as i32) }]
    }

    /// `T_{1,j}`: empty for `j = 1`, the relator for `j = m`.
    fn big_t(self, j: usize) -> FreeWord {
        let two_g = 2 * self.g as i32;
        if j == 1 {
            Vec::new()
        } else if j == self.m {
            (1..=two_g).chain((1..=two_g).map(|r| -r)).collect()
        } else {
            vec![two_g + j as i32 - 1]
        }
    }

    fn small_t(self, j: usize) -> FreeWord {
        free_group::mul(&self.big_t(j), &free_group::invert(&self.big_t(j - 1)))
    }

    fn cat(parts: &[&[i32]]) -> FreeWord {
        free_group::reduce(&parts.concat())
    }

    /// Conjugation by `b_{k,r}` (`a_{k,r}` for odd `r`, its inverse for even `r`).
    fn b_auto(self, k: usize, r: usize) -> Automorphism {
        let inv = free_group::invert;
        let tk = self.small_t(k);
        let br = self.b(r);
        let bimg = |s: usize| -> FreeWord {
            let bs = self.b(s);
            if s < r {
                Frame::cat(&[&inv(&tk), &bs])
            } else if s > r {
                Frame::cat(&[&bs, &inv(&br), &tk, &br])
            } else {
                bs
            }
        };
        let timg = |j: usize| -> FreeWord {
            if j < k {
                self.small_t(j)
            } else if j == k {
                let tp = self.big_t(k - 1);
                Frame::cat(&[&tp, &inv(&br), &tk, &br, &inv(&tp)])
            } else {
                Frame::cat(&[&inv(&tk), &self.small_t(j), &tk])
            }
        };
        let mut images: Vec<FreeWord> = (1..=2 * self.g)
            .map(|s| if s % 2 == 1 { bimg(s) } else { inv(&bimg(s)) })
            .collect();
        for j in 2..self.m {
            let w: Vec<i32> = (2..=j).rev().flat_map(timg).collect();
            images.push(free_group::reduce(&w));
        }
        Automorphism::from_images(images)
    }

    /// Conjugation by `T_{i,j}`, `2 <= i < j <= m`.
    fn big_t_auto(self, i: usize, j: usize) -> Automorphism {
        let inv = free_group::invert;
        let t = |k| self.big_t(k);
        let mut images: Vec<FreeWord> = (1..=2 * self.g as i32).map(|s| vec![s]).collect();
        for k in 2..self.m {
            images.push(if k < i || k >= j {
                t(k)
            } else {
                Frame::cat(&[&t(i - 1), &inv(&t(i)), &t(k), &inv(&t(j)), &t(i), &inv(&t(i - 1)), &t(j)])
            });
        }
        Automorphism::from_images(images)
    }

    /// A strand-1 letter as an element of `F1`.
    fn strand1_word(self, l: Letter) -> Result<FreeWord> {
        let w = match l.gen {
            Gen::A { i: 1, r } => vec![r as i32],
            Gen::Tlow(1, j) => self.small_t(j),
            Gen::Tup(1, j) => self.big_t(j),
            _ => return Err(Error::Precondition(format!("{l} is not a strand-1 letter"))),
        };
        Ok(if l.sign > 0 { w } else { free_group::invert(&w) })
    }

    /// Back to letters `a_{1,r}`, `T_{1,k}`.
    fn letters(self, w: &[i32]) -> Vec<Letter> {
        let two_g = 2 * self.g;
        w.iter()
            .map(|&x| {
                let u = x.unsigned_abs() as usize;
                let l = if u <= two_g { Letter::a(1, u) } else { Letter::tt(1, u - two_g + 1) };
                l.pow(if x > 0 { 1 } else { -1 })
            })
            .collect()
    }
}

fn touches_strand1(l: Letter) -> bool {
    l.min_strand() == 1
}

/// Drops strand 1 and renumbers the rest down by one.
pub fn delete_first_strand(letters: &[Letter]) -> Vec<Letter> {
    letters
        .iter()
        .filter(|l| !touches_strand1(**l))
        .map(|l| {
            let gen = match l.gen {
                Gen::A { i, r } => Gen::A { i: i - 1, r },
                Gen::Tlow(i, j) => Gen::Tlow(i - 1, j - 1),
                Gen::Tup(i, j) => Gen::Tup(i - 1, j - 1),
                Gen::Sigma(j) => Gen::Sigma(j - 1),
            };
            Letter { gen, sign: l.sign }
        })
        .collect()
}

/// `beta x beta^-1` for a positive disc word `beta`, as a pure word.
fn conj_by_positive(beta: &[Letter], x: &[Letter]) -> Vec<Letter> {
    let mut w = x.to_vec();
    for s in beta.iter().rev() {
        let Gen::Sigma(k) = s.gen else { unreachable!("permutation braids are positive sigma words") };
        w = w.into_iter().flat_map(|l| sigma_conj_letter(k, l)).collect();
    }
    w
}

/// Rewrites a braid word with trivial permutation over `a_{i,r}` and `t_{i,j}`,
/// telescoping through the canonical permutation braids of its prefixes.
pub fn to_pure(w: &BraidWord) -> Result<BraidWord> {
    if !permutation_of(w).is_identity() {
        return Err(Error::NontrivialPermutation);
    }
    let n = w.amb.n;
    let mut p = Permutation::identity(n);
    let mut beta: Vec<Letter> = Vec::new();
    let mut out = Vec::new();
    for &l in &w.letters {
        match l.gen {
            Gen::Sigma(j) => {
                let q = p.then(&Permutation::transposition(n, j));
                let grows = q.inversions() > p.inversions();
                let beta_q = permutation_braid(&q);
                match (l.sign > 0, grows) {
                    (true, false) => out.extend(conj_by_positive(&beta_q, &[Letter::t(j, j + 1)])),
                    (false, true) => out.extend(conj_by_positive(&beta, &[Letter::t(j, j + 1).inv()])),
                    _ => {}
                }
                p = q;
                beta = beta_q;
            }
            _ => out.extend(conj_by_positive(&beta, &[l])),
        }
    }
    Ok(BraidWord { amb: w.amb, letters: crate::braid_words::reduce_letters(&out) })
}

/// Writes strand-1 words over the free basis and splits kernel elements into levels.
pub struct Combing {
    surf: Arc<Surface>,
    verify: bool,
    autos: RwLock<HashMap<(usize, Letter), Arc<Automorphism>>>,
}

impl fmt::Debug for Combing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Combing").field("surf", &self.surf).field("verify", &self.verify).finish()
    }
}

impl Combing {
    pub fn new(surf: Arc<Surface>) -> Combing {
        Combing { surf, verify: false, autos: RwLock::new(HashMap::new()) }
    }

    /// Checks every free basis rewrite against the exact substitution oracle.
    pub fn with_verification(mut self, verify: bool) -> Combing {
        self.verify = verify;
        self
    }

    pub fn surface(&self) -> &Surface {
        &self.surf
    }

    pub fn genus(&self) -> usize {
        self.surf.genus()
    }

    fn frame(&self, m: usize) -> Frame {
        Frame { m, g: self.genus() }
    }

    /// Conjugation by a letter on strands `2..=m`, acting on `F1`.
    fn letter_auto(&self, m: usize, l: Letter) -> Result<Arc<Automorphism>> {
        if let Some(a) = self.autos.read().get(&(m, l)) {
            return Ok(a.clone());
        }
        let frame = self.frame(m);
        let positive = match l.gen {
            Gen::A { i, r } if i >= 2 && i <= m => {
                let b = frame.b_auto(i, r);
                // b_{i,r} is a_{i,r}^-1 for even r
                let b_sign = if r % 2 == 1 { 1 } else { -1 };
                if l.sign * b_sign > 0 {
                    return Ok(self.remember(m, l, b));
                }
                return Ok(self.remember(m, l, invert_auto(&b)?));
            }
            Gen::Tup(i, j) if i >= 2 && j <= m => frame.big_t_auto(i, j),
            Gen::Tlow(i, j) if i >= 2 && j <= m => {
                let upper = frame.big_t_auto(i, j);
                if j == i + 1 {
                    upper
                } else {
                    upper.compose(&invert_auto(&frame.big_t_auto(i, j - 1))?)
                }
            }
            _ => return Err(Error::Precondition(format!("{l} must live on strands 2..={m}"))),
        };
        let a = if l.sign > 0 { positive } else { invert_auto(&positive)? };
        Ok(self.remember(m, l, a))
    }

    fn remember(&self, m: usize, l: Letter, a: Automorphism) -> Arc<Automorphism> {
        let a = Arc::new(a);
        self.autos.write().insert((m, l), a.clone());
        a
    }

    /// `x . y . x^-1` for a letter `x` off strand 1 and a word `y` over
    /// `a_{1,r}`, `T_{1,k}` in an `m`-strand frame. The result uses the
    /// generators `a_{1,r}` and `T_{1,k}` with `k < m`.
    pub fn conj_strand1(&self, m: usize, x: Letter, y: &[Letter]) -> Result<Vec<Letter>> {
        let frame = self.frame(m);
        let yw = self.strand1_free_word(m, y)?;
        Ok(frame.letters(&self.letter_auto(m, x)?.apply(&yw)))
    }

    /// A strand-1 word as an element of `F1` for an `m`-strand frame.
    pub fn strand1_free_word(&self, m: usize, y: &[Letter]) -> Result<FreeWord> {
        let frame = self.frame(m);
        let mut out = Vec::new();
        for &l in y {
            l.check(Ambient::new(m, self.genus()))?;
            out = free_group::mul(&out, &frame.strand1_word(l)?);
        }
        Ok(out)
    }

    /// One left-to-right pass: strand-1 letters are pushed left through the
    /// letters seen so far. Returns the strand-1 part `f` in `F1`, the
    /// remaining letters, and the conjugation action of the remainder.
    pub fn peel(&self, letters: &[Letter], m: usize) -> Result<(FreeWord, Vec<Letter>, Automorphism)> {
        let frame = self.frame(m);
        let mut f = Vec::new();
        let mut rest = Vec::new();
        let mut psi = Automorphism::identity(frame.rank());
        for &l in letters {
            if touches_strand1(l) {
                f = free_group::mul(&f, &psi.apply(&frame.strand1_word(l)?));
            } else {
                psi = psi.compose(&*self.letter_auto(m, l)?);
                rest.push(l);
            }
        }
        Ok((f, rest, psi))
    }

    /// Rewrites `f` in `F1` of the frame of level `level` (with `n` strands in
    /// total) over the free generators `f_{level,j,gamma}`.
    pub fn to_free_basis(&self, f: &[i32], n: usize, level: usize) -> Result<FreeBasisWord> {
        let m = n + 1 - level;
        let two_g = 2 * self.genus();
        let mut out = FreeBasisWord { level, letters: Vec::new() };
        let mut gamma = SurfElem::identity();
        let emit_big_t = |out: &mut FreeBasisWord, gamma: &SurfElem, k: usize, sign: i8| {
            let js: Vec<usize> = if sign > 0 { (2..=k).rev().collect() } else { (2..=k).collect() };
            for j in js {
                out.push(FreeGenLetter { level, j: j + level - 1, gamma: gamma.clone(), sign });
            }
        };
        for &x in f {
            let u = x.unsigned_abs() as usize;
            let sign: i8 = if x > 0 { 1 } else { -1 };
            if u <= two_g {
                let l = SurfLetter::new(u, sign);
                for face in self.surf.fill_edge(&gamma, l)?.iter() {
                    emit_big_t(&mut out, &face.anchor, m, face.sign);
                }
                gamma = self.surf.mul_letter(&gamma, l)?;
            } else {
                emit_big_t(&mut out, &gamma, u - two_g + 1, sign);
            }
        }
        if !gamma.is_identity() {
            return Err(Error::NotInKernel(format!("strand-1 loop ends at {gamma}")));
        }
        if self.verify {
            let back = self.free_basis_to_frame(&out, n)?;
            if back != free_group::reduce(f) {
                return Err(Error::Inconsistent("free basis rewrite does not substitute back".into()));
            }
        }
        Ok(out)
    }

    /// Substitutes `gamma~ t_{1,j} gamma~^-1` for every letter, in the frame of the word's level.
    pub fn free_basis_to_frame(&self, w: &FreeBasisWord, n: usize) -> Result<FreeWord> {
        let frame = self.frame(n + 1 - w.level);
        let mut out = Vec::new();
        for x in &w.letters {
            let gw: FreeWord = x.gamma.word().iter().map(|l| l.index() as i32 * l.sign() as i32).collect();
            let t = frame.small_t(x.j + 1 - w.level);
            let t = if x.sign > 0 { t } else { free_group::invert(&t) };
            out = free_group::mul(&out, &Frame::cat(&[&gw, &t, &free_group::invert(&gw)]));
        }
        Ok(out)
    }

    /// Splits a pure word of an `m`-strand frame into its levels, frame-relative.
    fn decompose_frame(&self, letters: &[Letter], m: usize) -> Result<Vec<FreeBasisWord>> {
        if m == 1 {
            return Ok(Vec::new());
        }
        let lower: Vec<FreeBasisWord> = self
            .decompose_frame(&delete_first_strand(letters), m - 1)?
            .into_iter()
            .map(shift_up)
            .collect();
        let mut word = letters.to_vec();
        word.extend(invert_letters(&lift(&lower)));
        let (f, _rest, psi) = self.peel(&word, m)?;
        // the remainder deletes to the identity, so it acts as an inner automorphism
        let c = psi
            .inner_conjugator()
            .ok_or_else(|| Error::Inconsistent("remainder does not act innerly".into()))?;
        let top = self.to_free_basis(&free_group::mul(&f, &c), m, 1)?;
        let mut parts = vec![top];
        parts.extend(lower);
        Ok(parts)
    }

    /// Decomposes a braid word with trivial projection to `H_n`.
    pub fn decompose(&self, w: &BraidWord) -> Result<KDecomposition> {
        if w.amb.g != self.genus() {
            return Err(Error::AmbientMismatch(format!("genus {} vs {}", w.amb.g, self.genus())));
        }
        let h = phi(&self.surf, w)?;
        if !h.is_identity() {
            return Err(Error::NotInKernel(format!("projection is {h}")));
        }
        let pure = to_pure(w)?;
        self.decompose_pure(&pure)
    }

    /// As `decompose`, for a word already over `a`, `t` and `T` letters.
    pub fn decompose_pure(&self, w: &BraidWord) -> Result<KDecomposition> {
        if w.letters.iter().any(|l| !l.is_pure()) {
            return Err(Error::Precondition("word contains sigma letters".into()));
        }
        let parts = self.decompose_frame(&w.letters, w.amb.n)?;
        Ok(KDecomposition { amb: w.amb, parts })
    }
}

fn invert_auto(a: &Automorphism) -> Result<Automorphism> {
    a.inverse().ok_or_else(|| Error::Inconsistent("conjugation action failed to invert".into()))
}

fn shift_up(w: FreeBasisWord) -> FreeBasisWord {
    FreeBasisWord {
        level: w.level + 1,
        letters: w
            .letters
            .into_iter()
            .map(|x| FreeGenLetter { level: x.level + 1, j: x.j + 1, ..x })
            .collect(),
    }
}

/// The braid word `prod gamma~ t_{i,j} gamma~^-1` of a list of levels.
pub fn lift(parts: &[FreeBasisWord]) -> Vec<Letter> {
    let mut out = Vec::new();
    for part in parts {
        for x in &part.letters {
            let gw: Vec<Letter> = x.gamma.word().iter().map(|l| Letter::a(x.level, l.index()).pow(l.sign())).collect();
            out.extend_from_slice(&gw);
            out.push(Letter::t(x.level, x.j).pow(x.sign));
            out.extend(invert_letters(&gw));
        }
    }
    out
}

pub fn reconstruct(d: &KDecomposition) -> BraidWord {
    BraidWord { amb: d.amb, letters: lift(&d.parts) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid_words::{artin_image, parse_word};

    fn combing(g: usize) -> Combing {
        Combing::new(Arc::new(Surface::new(g))).with_verification(true)
    }

    fn shown(d: &KDecomposition) -> Vec<String> {
        d.parts.iter().map(|p| p.letters.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect()
    }

    #[test]
    fn purification() {
        let p = |s: &str, n| to_pure(&parse_word(s, n, 1).unwrap()).unwrap().to_string();
        assert_eq!(p("s[1] s[1]", 2), "t[1,2]");
        assert_eq!(p("a[1,1] s[1] s[1] a[1,1]^-1", 2), "a[1,1] t[1,2] a[1,1]^-1");
        assert_eq!(p("s[1] a[1,1] s[1]^-1", 2), "t[1,2] a[2,1]");
        assert!(matches!(to_pure(&parse_word("s[1]", 2, 1).unwrap()), Err(Error::NontrivialPermutation)));
        for s in ["s[1] s[2] s[1] s[2]^-1 s[1]^-1 s[2]^-1", "s[2]^-1 s[1] s[1] s[2]^-1", "s[1]^-1 s[2] s[2] s[1]^-1"] {
            let w = parse_word(s, 3, 1).unwrap();
            assert_eq!(artin_image(&to_pure(&w).unwrap()).unwrap(), artin_image(&w).unwrap(), "{s}");
        }
    }

    #[test]
    fn strand1_conjugation() {
        let c = combing(1);
        let x = Letter::tt(2, 3);
        assert_eq!(c.conj_strand1(3, x, &[Letter::a(1, 1)]).unwrap(), vec![Letter::a(1, 1)]);
        let got = c.conj_strand1(3, x, &[Letter::tt(1, 2)]).unwrap();
        let want = [Letter::tt(1, 3).inv(), Letter::tt(1, 2), Letter::tt(1, 3)];
        assert_eq!(c.strand1_free_word(3, &got).unwrap(), c.strand1_free_word(3, &want).unwrap());
        let y = [Letter::a(1, 2), Letter::tt(1, 2).inv()];
        let there = c.conj_strand1(3, Letter::a(2, 1), &y).unwrap();
        let back = c.conj_strand1(3, Letter::a(2, 1).inv(), &there).unwrap();
        assert_eq!(back, y.to_vec());
    }

    #[test]
    fn free_basis_examples() {
        let c = combing(1);
        let fw = |s: &str| c.strand1_free_word(2, &parse_word(s, 2, 1).unwrap().letters).unwrap();
        let fb = |s: &str| c.to_free_basis(&fw(s), 2, 1).unwrap().letters.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(fb("T[1,2]"), ["f[1,2,\"\"]^1"]);
        assert_eq!(fb("a[1,1] T[1,2] a[1,1]^-1"), ["f[1,2,\"w1\"]^1"]);
        assert_eq!(fb("a[1,1] a[1,2] a[1,1]^-1 a[1,2]^-1"), ["f[1,2,\"\"]^1"]);
        assert!(matches!(c.to_free_basis(&fw("a[1,1]"), 2, 1), Err(Error::NotInKernel(_))));
    }

    #[test]
    fn decompositions() {
        let c = combing(1);
        let d = |s: &str, n| shown(&c.decompose(&parse_word(s, n, 1).unwrap()).unwrap());
        assert_eq!(d("", 3), ["", ""]);
        assert_eq!(d("s[1] s[1]", 2), ["f[1,2,\"\"]^1"]);
        assert_eq!(d("a[1,1] s[1] s[1] a[1,1]^-1", 2), ["f[1,2,\"w1\"]^1"]);
        assert_eq!(d("t[2,3]", 3), ["", "f[2,3,\"\"]^1"]);
        assert!(matches!(c.decompose(&parse_word("a[1,1]", 2, 1).unwrap()), Err(Error::NotInKernel(_))));
    }

    #[test]
    fn reconstruction_is_idempotent() {
        let c = combing(2);
        let w = parse_word("a[2,3] s[1] s[1] a[1,1] t[2,3]^-1 a[1,1]^-1 a[2,3]^-1 T[1,3]", 3, 2).unwrap();
        let d = c.decompose(&w).unwrap();
        assert_eq!(c.decompose(&reconstruct(&d)).unwrap(), d);
    }

    #[test]
    fn dump_format() {
        let c = combing(1);
        let d = c.decompose(&parse_word("a[1,1] s[1] s[1] a[1,1]^-1", 3, 1).unwrap()).unwrap();
        assert_eq!(d.to_string(), "level 1: f[1,2,\"w1\"]^1\nlevel 2:");
    }
}
