//! Words in the surface braid group `B_n(M)` and the singular braid monoid.
//!
//! Words read left to right in time. Besides the braid generators `a[i,r]`
//! and `s[j]`, the pure generators `t[i,j]` and `T[i,j]` are accepted as
//! shorthands for their disc braid words:
//! `t[i,j] = s[j-1]^-1 .. s[i+1]^-1 s[i] s[i] s[i+1] .. s[j-1]` and
//! `T[i,j] = t[i,j] t[i,j-1] .. t[i,i+1]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::free_group::Automorphism;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Ambient {
    pub n: usize,
    pub g: usize,
}

impl Ambient {
    pub fn new(n: usize, g: usize) -> Ambient {
        Ambient { n, g }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Gen {
    /// Strand `i` runs once along the wall `r` of the fundamental polygon.
    A { i: usize, r: usize },
    Sigma(usize),
    /// `t_{i,j}` with `i < j`.
    Tlow(usize, usize),
    /// `T_{i,j}` with `i < j`.
    Tup(usize, usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: Gen,
    pub sign: i8,
}

impl Letter {
    pub fn a(i: usize, r: usize) -> Letter {
        Letter { gen: Gen::A { i, r }, sign: 1 }
    }

    pub fn sigma(j: usize) -> Letter {
        Letter { gen: Gen::Sigma(j), sign: 1 }
    }

    /// `t_{i,j} = t_{j,i}`.
    pub fn t(i: usize, j: usize) -> Letter {
        Letter { gen: Gen::Tlow(i.min(j), i.max(j)), sign: 1 }
    }

    pub fn tt(i: usize, j: usize) -> Letter {
        Letter { gen: Gen::Tup(i, j), sign: 1 }
    }

    pub fn inv(self) -> Letter {
        Letter { gen: self.gen, sign: -self.sign }
    }

    pub fn pow(self, sign: i8) -> Letter {
        Letter { gen: self.gen, sign: self.sign * sign }
    }

    pub fn is_pure(self) -> bool {
        !matches!(self.gen, Gen::Sigma(_))
    }

    /// The lowest strand index the letter touches.
    pub fn min_strand(self) -> usize {
        match self.gen {
            Gen::A { i, .. } | Gen::Tlow(i, _) | Gen::Tup(i, _) => i,
            Gen::Sigma(j) => j,
        }
    }

    pub fn check(self, amb: Ambient) -> Result<()> {
        let ok = match self.gen {
            Gen::A { i, r } => (1..=amb.n).contains(&i) && (1..=2 * amb.g).contains(&r),
            Gen::Sigma(j) => j >= 1 && j < amb.n,
            Gen::Tlow(i, j) | Gen::Tup(i, j) => i >= 1 && i < j && j <= amb.n,
        };
        if ok && (self.sign == 1 || self.sign == -1) {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("{self} for n={}, g={}", amb.n, amb.g)))
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gen {
            Gen::A { i, r } => write!(f, "a[{i},{r}]")?,
            Gen::Sigma(j) => write!(f, "s[{j}]")?,
            Gen::Tlow(i, j) => write!(f, "t[{i},{j}]")?,
            Gen::Tup(i, j) => write!(f, "T[{i},{j}]")?,
        }
        if self.sign < 0 {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SingularLetter {
    Plain(Letter),
    Tau(usize),
}

impl fmt::Display for SingularLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularLetter::Plain(l) => l.fmt(f),
            SingularLetter::Tau(i) => write!(f, "x[{i}]"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    pub amb: Ambient,
    pub letters: Vec<Letter>,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SingularWord {
    pub amb: Ambient,
    pub letters: Vec<SingularLetter>,
}

impl BraidWord {
    pub fn new(amb: Ambient, letters: Vec<Letter>) -> Result<BraidWord> {
        for l in &letters {
            l.check(amb)?;
        }
        Ok(BraidWord { amb, letters })
    }

    pub fn empty(amb: Ambient) -> BraidWord {
        BraidWord { amb, letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl SingularWord {
    pub fn singular_points(&self) -> usize {
        self.letters.iter().filter(|l| matches!(l, SingularLetter::Tau(_))).count()
    }

    pub fn concat(&self, other: &SingularWord) -> Result<SingularWord> {
        same_ambient(self.amb, other.amb)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(SingularWord { amb: self.amb, letters })
    }
}

impl From<BraidWord> for SingularWord {
    fn from(w: BraidWord) -> SingularWord {
        SingularWord {
            amb: w.amb,
            letters: w.letters.into_iter().map(SingularLetter::Plain).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters))
    }
}

impl fmt::Display for SingularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn format_letters(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

fn same_ambient(a: Ambient, b: Ambient) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AmbientMismatch(format!("{a:?} vs {b:?}")))
    }
}

fn parse_token(tok: &str, amb: Ambient) -> Result<SingularLetter> {
    let syntax = |reason: &str| Error::Syntax {
        token: tok.to_string(),
        reason: reason.to_string(),
    };
    let (body, sign) = match tok.strip_suffix("^-1") {
        Some(b) => (b, -1i8),
        None => (tok, 1i8),
    };
    let open = body.find('[').ok_or_else(|| syntax("expected name[indices]"))?;
    let inner = body[open + 1..].strip_suffix(']').ok_or_else(|| syntax("missing ]"))?;
    let nums: Vec<usize> = inner
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| syntax("bad index")))
        .collect::<Result<_>>()?;
    let gen = match (&body[..open], nums.as_slice()) {
        ("a", &[i, r]) => Gen::A { i, r },
        ("s", &[j]) => Gen::Sigma(j),
        ("t", &[i, j]) if i != j => Gen::Tlow(i.min(j), i.max(j)),
        ("T", &[i, j]) => Gen::Tup(i, j),
        ("x", &[i]) => {
            if sign < 0 {
                return Err(syntax("singular letters have no inverse"));
            }
            if i == 0 || i >= amb.n {
                return Err(Error::OutOfRange(format!("{tok} for n={}", amb.n)));
            }
            return Ok(SingularLetter::Tau(i));
        }
        _ => return Err(syntax("unknown generator")),
    };
    let l = Letter { gen, sign };
    l.check(amb)?;
    Ok(SingularLetter::Plain(l))
}

/// Parses a word that may contain singular letters `x[i]`.
pub fn parse_singular(text: &str, n: usize, g: usize) -> Result<SingularWord> {
    let amb = Ambient::new(n, g);
    let letters = text.split_whitespace().map(|t| parse_token(t, amb)).collect::<Result<_>>()?;
    Ok(SingularWord { amb, letters })
}

pub fn parse_word(text: &str, n: usize, g: usize) -> Result<BraidWord> {
    let sw = parse_singular(text, n, g)?;
    let letters = sw
        .letters
        .into_iter()
        .map(|l| match l {
            SingularLetter::Plain(l) => Ok(l),
            SingularLetter::Tau(i) => Err(Error::Syntax {
                token: format!("x[{i}]"),
                reason: "singular letter in a braid word".into(),
            }),
        })
        .collect::<Result<_>>()?;
    Ok(BraidWord { amb: sw.amb, letters })
}

/// A permutation of strands; `images[i]` is the final position of strand `i` (0-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    /// Swaps positions `j` and `j+1` (1-based).
    pub fn transposition(n: usize, j: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.0.swap(j - 1, j);
        p
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::OutOfRange(format!("not a permutation: {images:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(images.iter().map(|x| x - 1).collect()))
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of the 1-based strand `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    /// `self` followed by `other`: `i -> other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inversions(&self) -> usize {
        let p = &self.0;
        (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
    }
}

pub fn letter_permutation(l: Letter, n: usize) -> Permutation {
    match l.gen {
        Gen::Sigma(j) => Permutation::transposition(n, j),
        _ => Permutation::identity(n),
    }
}

pub fn permutation_of(w: &BraidWord) -> Permutation {
    w.letters
        .iter()
        .fold(Permutation::identity(w.amb.n), |p, &l| p.then(&letter_permutation(l, w.amb.n)))
}

pub fn invert_letters(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inv()).collect()
}

pub fn invert_word(w: &BraidWord) -> BraidWord {
    BraidWord { amb: w.amb, letters: invert_letters(&w.letters) }
}

pub fn concat(w1: &BraidWord, w2: &BraidWord) -> Result<BraidWord> {
    same_ambient(w1.amb, w2.amb)?;
    let mut letters = w1.letters.clone();
    letters.extend_from_slice(&w2.letters);
    Ok(BraidWord { amb: w1.amb, letters })
}

/// Cancels adjacent `x x^-1` pairs; not a normal form.
pub fn syn_reduce(w: &BraidWord) -> BraidWord {
    BraidWord { amb: w.amb, letters: reduce_letters(&w.letters) }
}

pub fn reduce_letters(w: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// All `2^d` resolutions of the singular points, with their signs. The first
/// singular letter is the most significant branch.
pub fn resolve_singular(w: &SingularWord) -> Vec<(i8, BraidWord)> {
    let d = w.singular_points();
    (0..1usize << d)
        .map(|mask| {
            let mut coeff = 1i8;
            let mut k = 0;
            let letters = w
                .letters
                .iter()
                .map(|l| match *l {
                    SingularLetter::Plain(l) => l,
                    SingularLetter::Tau(i) => {
                        let negative = mask >> (d - 1 - k) & 1 == 1;
                        k += 1;
                        if negative {
                            coeff = -coeff;
                            Letter::sigma(i).inv()
                        } else {
                            Letter::sigma(i)
                        }
                    }
                })
                .collect();
            (coeff, BraidWord { amb: w.amb, letters })
        })
        .collect()
}

/// The disc braid word of a `t` or `T` letter; other letters are returned as is.
pub fn expand_disc_letter(l: Letter) -> Vec<Letter> {
    let positive = match l.gen {
        Gen::Tlow(i, j) => {
            let mut w: Vec<Letter> = (i + 1..j).rev().map(|k| Letter::sigma(k).inv()).collect();
            w.push(Letter::sigma(i));
            w.push(Letter::sigma(i));
            w.extend((i + 1..j).map(Letter::sigma));
            w
        }
        Gen::Tup(i, j) => (i + 1..=j).rev().flat_map(|k| expand_disc_letter(Letter::t(i, k))).collect(),
        _ => return vec![l],
    };
    if l.sign > 0 {
        positive
    } else {
        invert_letters(&positive)
    }
}

fn sigma_action(n: usize, j: usize, sign: i8) -> Automorphism {
    let mut images: Vec<Vec<i32>> = (1..=n as i32).map(|x| vec![x]).collect();
    let (a, b) = (j as i32, j as i32 + 1);
    if sign > 0 {
        images[j - 1] = vec![a, b, -a];
        images[j] = vec![a];
    } else {
        images[j - 1] = vec![b];
        images[j] = vec![-b, a, b];
    }
    Automorphism::from_images(images)
}

/// Artin action on the free group `F(x_1..x_n)`; `w1 w2` acts as `phi(w1) o phi(w2)`.
/// Only disc letters are allowed.
pub fn artin_image(w: &BraidWord) -> Result<Automorphism> {
    let mut acc = Automorphism::identity(w.amb.n);
    for &l in &w.letters {
        for s in expand_disc_letter(l) {
            match s.gen {
                Gen::Sigma(j) => acc = acc.compose(&sigma_action(w.amb.n, j, s.sign)),
                _ => return Err(Error::Precondition(format!("{s} has no Artin image"))),
            }
        }
    }
    Ok(acc)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub family: &'static str,
    pub lhs: Vec<Letter>,
    pub rhs: Vec<Letter>,
}

/// `T_{i,j}` as a word, empty for `i == j`.
fn tup(i: usize, j: usize) -> Vec<Letter> {
    if i == j {
        Vec::new()
    } else {
        vec![Letter::tt(i, j)]
    }
}

fn cat(parts: &[&[Letter]]) -> Vec<Letter> {
    parts.concat()
}

/// `b_{l,m}`: `a_{l,m}` for odd `m`, `a_{l,m}^-1` for even `m`.
fn b(l: usize, m: usize) -> Letter {
    Letter::a(l, m).pow(if m % 2 == 1 { 1 } else { -1 })
}

/// Conjugation `s_k x s_k^-1` of an `a` or `t` letter, as a pure word.
pub fn sigma_conj_letter(k: usize, x: Letter) -> Vec<Letter> {
    let t = Letter::t;
    let positive = match x.gen {
        Gen::A { i, r } => {
            let even = r % 2 == 0;
            if k != i && k + 1 != i {
                vec![Letter::a(i, r)]
            } else if k == i {
                if even {
                    vec![Letter::a(i + 1, r), t(i, i + 1).inv()]
                } else {
                    vec![t(i, i + 1), Letter::a(i + 1, r)]
                }
            } else if even {
                vec![t(i - 1, i), Letter::a(i - 1, r)]
            } else {
                vec![Letter::a(i - 1, r), t(i - 1, i).inv()]
            }
        }
        Gen::Tlow(i, j) => {
            if k + 1 == i {
                vec![t(i - 1, j)]
            } else if k == i {
                if i + 1 == j {
                    vec![t(i, j)]
                } else {
                    vec![t(i, i + 1), t(i + 1, j), t(i, i + 1).inv()]
                }
            } else if k + 1 == j {
                vec![t(i, j - 1)]
            } else if k == j {
                vec![t(i, j).inv(), t(i, j + 1), t(i, j)]
            } else {
                vec![t(i, j)]
            }
        }
        Gen::Tup(i, j) => (i + 1..=j)
            .rev()
            .flat_map(|m| sigma_conj_letter(k, Letter::t(i, m)))
            .collect(),
        Gen::Sigma(_) => panic!("sigma_conj_letter expects a pure letter"),
    };
    if x.sign > 0 {
        positive
    } else {
        invert_letters(&positive)
    }
}

/// Every conjugation identity of the tables, instantiated for `(n, g)`.
pub fn relation_table(n: usize, g: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    let mut push = |family: &'static str, lhs: Vec<Letter>, rhs: Vec<Letter>| {
        out.push(Relation { family, lhs, rhs });
    };
    let walls = 1..=2 * g;
    let t = Letter::t;
    for k in 1..n {
        let s = Letter::sigma(k);
        for i in 1..=n {
            for r in walls.clone() {
                push("sigma_a", vec![s, Letter::a(i, r), s.inv()], sigma_conj_letter(k, Letter::a(i, r)));
            }
            for j in i + 1..=n {
                push("sigma_t", vec![s, t(i, j), s.inv()], sigma_conj_letter(k, t(i, j)));
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for r in walls.clone() {
                let (aj, ai) = (Letter::a(j, r), Letter::a(i, r));
                let tp = tup(i, j - 1);
                let tpi = invert_letters(&tp);
                let odd = r % 2 == 1;
                let rhs = if odd {
                    cat(&[&tp, &[ai.inv(), t(i, j), ai], &tpi])
                } else {
                    cat(&[&[ai.inv()], &tpi, &[Letter::tt(i, j), ai]])
                };
                push("lemar1", vec![aj, t(i, j), aj.inv()], rhs);
                let rhs = if odd {
                    cat(&[&[ai], &tpi, &[Letter::tt(i, j), ai.inv()]])
                } else {
                    cat(&[&tp, &[ai, t(i, j), ai.inv()], &tpi])
                };
                push("lemar1_inverse", vec![aj.inv(), t(i, j), aj], rhs);
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in j + 1..=n {
                if i == j || i == k {
                    continue;
                }
                for r in walls.clone() {
                    let a = Letter::a(i, r);
                    let plus = vec![a, t(j, k), a.inv()];
                    let minus = vec![a.inv(), t(j, k), a];
                    if i < j || i > k {
                        push("far_a_t", plus, vec![t(j, k)]);
                        push("far_a_t", minus, vec![t(j, k)]);
                        continue;
                    }
                    let aj = Letter::a(j, r);
                    let mid = cat(&[&invert_letters(&tup(j, i - 1)), &tup(j, i)]);
                    let alpha = if r % 2 == 1 {
                        cat(&[&[aj], &mid, &[aj.inv()]])
                    } else {
                        cat(&[&[aj.inv()], &mid, &[aj]])
                    };
                    let around_alpha = cat(&[&alpha, &[t(j, k)], &invert_letters(&alpha)]);
                    let around_t = vec![t(j, i).inv(), t(j, k), t(j, i)];
                    if r % 2 == 1 {
                        push("far_a_t", plus, around_t);
                        push("far_a_t", minus, around_alpha);
                    } else {
                        push("far_a_t", plus, around_alpha);
                        push("far_a_t", minus, around_t);
                    }
                }
            }
        }
    }
    for i in 2..=n {
        for j in i + 1..=n {
            let tij = Letter::tt(i, j);
            for r in walls.clone() {
                push("T_a", vec![tij, Letter::a(1, r), tij.inv()], vec![Letter::a(1, r)]);
            }
            for k in 2..=n {
                let lhs = vec![tij, Letter::tt(1, k), tij.inv()];
                let rhs = if k < i || k >= j {
                    vec![Letter::tt(1, k)]
                } else {
                    let t1 = |m: usize| tup(1, m);
                    let t1i = |m: usize| invert_letters(&tup(1, m));
                    cat(&[&t1(i - 1), &t1i(i), &t1(k), &t1i(j), &t1(i), &t1i(i - 1), &t1(j)])
                };
                push("T_T", lhs, rhs);
            }
        }
    }
    for k in 1..=n {
        for i in 1..=n {
            if i == k {
                continue;
            }
            for r in walls.clone() {
                for s in walls.clone() {
                    let lhs = vec![b(k, r), b(i, s), b(k, r).inv()];
                    let rhs = if s == r {
                        vec![b(i, s)]
                    } else if i < k {
                        if s < r {
                            vec![t(i, k).inv(), b(i, s)]
                        } else {
                            vec![b(i, s), b(i, r).inv(), t(i, k), b(i, r)]
                        }
                    } else if s < r {
                        vec![b(i, s), b(i, r).inv(), t(k, i).inv(), b(i, r)]
                    } else {
                        vec![t(k, i), b(i, s)]
                    };
                    push("b_table", lhs, rhs);
                }
            }
        }
    }
    if n >= 2 {
        let mut rel: Vec<Letter> = walls.clone().map(|r| Letter::a(1, r)).collect();
        rel.extend(walls.map(|r| Letter::a(1, r).inv()));
        push("relator", vec![Letter::tt(1, n)], rel);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        let w = parse_word("s[1] s[1]", 2, 1).unwrap();
        assert_eq!(w.letters, vec![Letter::sigma(1), Letter::sigma(1)]);
        let w = parse_word("a[1,1] s[2]^-1", 3, 1).unwrap();
        assert_eq!(w.letters, vec![Letter::a(1, 1), Letter::sigma(2).inv()]);
        assert_eq!(w.to_string(), "a[1,1] s[2]^-1");
        let sw = parse_singular("x[1]", 2, 1).unwrap();
        assert_eq!(sw.letters, vec![SingularLetter::Tau(1)]);
        assert!(parse_word("x[1]", 2, 1).is_err());
        assert!(matches!(parse_word("a[3,1]", 2, 1), Err(Error::OutOfRange(_))));
        assert!(matches!(parse_word("q[1]", 2, 1), Err(Error::Syntax { .. })));
        let w = parse_word("t[1,3]^-1 T[2,3]", 3, 2).unwrap();
        assert_eq!(parse_word(&w.to_string(), 3, 2).unwrap(), w);
    }

    #[test]
    fn permutations() {
        let p = permutation_of(&parse_word("s[1]", 2, 1).unwrap());
        assert_eq!(p.images(), vec![2, 1]);
        assert!(permutation_of(&parse_word("s[1] s[1]", 2, 1).unwrap()).is_identity());
        // strand 1 ends at 3, strand 2 at 1, strand 3 at 2
        let p = permutation_of(&parse_word("a[1,1] s[1] s[2]", 3, 1).unwrap());
        assert_eq!(p.images(), vec![3, 1, 2]);
    }

    #[test]
    fn inversion_and_reduction() {
        let w = parse_word("a[1,1] s[1]", 2, 1).unwrap();
        assert_eq!(invert_word(&w).to_string(), "s[1]^-1 a[1,1]^-1");
        assert!(syn_reduce(&parse_word("s[1] s[1]^-1", 2, 1).unwrap()).is_empty());
        let w = parse_word("s[1] s[2] s[2]^-1 s[1]", 3, 1).unwrap();
        assert_eq!(syn_reduce(&w).to_string(), "s[1] s[1]");
    }

    #[test]
    fn resolutions() {
        let r = resolve_singular(&parse_singular("x[1]", 2, 1).unwrap());
        let shown: Vec<(i8, String)> = r.iter().map(|(c, w)| (*c, w.to_string())).collect();
        assert_eq!(shown, vec![(1, "s[1]".to_string()), (-1, "s[1]^-1".to_string())]);
        let r = resolve_singular(&parse_singular("a[1,1]", 2, 1).unwrap());
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].0, 1);
        let r = resolve_singular(&parse_singular("x[1] x[1]", 2, 1).unwrap());
        assert_eq!(r.iter().map(|x| x.0).collect::<Vec<_>>(), vec![1, -1, -1, 1]);
    }

    #[test]
    fn artin_examples() {
        let amb = Ambient::new(2, 1);
        let a = artin_image(&BraidWord::new(amb, vec![Letter::sigma(1)]).unwrap()).unwrap();
        assert_eq!(a.images(), &[vec![1, 2, -1], vec![1]]);
        let id = artin_image(&parse_word("s[1] s[1]^-1", 2, 1).unwrap()).unwrap();
        assert!(id.is_identity());
        let lhs = artin_image(&parse_word("s[1] s[2] s[1]", 3, 1).unwrap()).unwrap();
        let rhs = artin_image(&parse_word("s[2] s[1] s[2]", 3, 1).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(artin_image(&parse_word("a[1,1]", 2, 1).unwrap()).is_err());
    }

    #[test]
    fn table_entries() {
        let table = relation_table(3, 1);
        let has = |lhs: Vec<Letter>, rhs: Vec<Letter>| table.iter().any(|r| r.lhs == lhs && r.rhs == rhs);
        let s = |j| Letter::sigma(j);
        assert!(has(vec![s(2), Letter::a(1, 1), s(2).inv()], vec![Letter::a(1, 1)]));
        assert!(has(
            vec![s(1), Letter::a(1, 1), s(1).inv()],
            vec![Letter::t(1, 2), Letter::a(2, 1)]
        ));
        let t23 = Letter::tt(2, 3);
        let t1 = |k| Letter::tt(1, k);
        assert!(has(
            vec![t23, t1(2), t23.inv()],
            vec![t1(2).inv(), t1(2), t1(3).inv(), t1(2), t1(3)]
        ));
    }
}
