//! The surface group `pi_1(M) = < w1..w2g | w1 w2 .. w2g w1^-1 w2^-1 .. w2g^-1 >`.
//!
//! Elements are kept as shortlex-least geodesic words under the letter order
//! `w1 < w1^-1 < w2 < w2^-1 < ..`. For g = 1 this is `w1^a w2^b`. Geodesic
//! normal forms are prefix-closed, so they double as a Schreier transversal
//! whose tree is used to fill null words with anchored relator faces.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::error::{Error, Result};

/// Default budget for the genus >= 2 normal form search.
pub const DEFAULT_FUEL: usize = 200_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SurfLetter(i16);

impl SurfLetter {
    pub fn new(index: usize, sign: i8) -> SurfLetter {
        assert!(index >= 1 && (sign == 1 || sign == -1), "bad surface letter");
        SurfLetter(index as i16 * sign as i16)
    }

    pub fn gen(index: usize) -> SurfLetter {
        SurfLetter::new(index, 1)
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn sign(self) -> i8 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> SurfLetter {
        SurfLetter(-self.0)
    }

    /// Position in the frozen shortlex order.
    fn rank(self) -> usize {
        2 * (self.index() - 1) + usize::from(self.0 < 0)
    }
}

impl fmt::Display for SurfLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 > 0 {
            write!(f, "w{}", self.index())
        } else {
            write!(f, "w{}^-1", self.index())
        }
    }
}

pub type SurfWord = Vec<SurfLetter>;

pub fn reduce_free(w: &[SurfLetter]) -> SurfWord {
    let mut out: SurfWord = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&x.inverse()) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn invert_surf_word(w: &[SurfLetter]) -> SurfWord {
    w.iter().rev().map(|x| x.inverse()).collect()
}

pub fn format_surf_word(w: &[SurfLetter]) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Parses whitespace separated `w3`, `w3^-1` tokens.
pub fn parse_surf_word(text: &str, g: usize) -> Result<SurfWord> {
    text.split_whitespace()
        .map(|tok| {
            let syntax = |reason: &str| Error::Syntax {
                token: tok.to_string(),
                reason: reason.to_string(),
            };
            let body = tok.strip_prefix('w').ok_or_else(|| syntax("expected w<index>"))?;
            let (num, sign) = match body.strip_suffix("^-1") {
                Some(num) => (num, -1),
                None => (body, 1),
            };
            let index: usize = num.parse().map_err(|_| syntax("bad index"))?;
            if index == 0 || index > 2 * g {
                return Err(Error::OutOfRange(format!("{tok} for genus {g}")));
            }
            Ok(SurfLetter::new(index, sign))
        })
        .collect()
}

/// A word in normal form. Only `Surface` constructs non-trivial values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SurfElem(Vec<SurfLetter>);

impl SurfElem {
    pub fn identity() -> SurfElem {
        SurfElem(Vec::new())
    }

    pub fn word(&self) -> &[SurfLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SurfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_surf_word(&self.0))
    }
}

/// `anchor~ . R^sign . anchor~^-1`, a free basis element of the relation kernel.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FaceFactor {
    pub anchor: SurfElem,
    pub sign: i8,
}

impl FaceFactor {
    pub fn inverse(&self) -> FaceFactor {
        FaceFactor {
            anchor: self.anchor.clone(),
            sign: -self.sign,
        }
    }
}

impl fmt::Display for FaceFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "face[\"{}\"]^{}", self.anchor, self.sign)
    }
}

/// Cancels adjacent `F F^-1` pairs.
pub fn reduce_faces(faces: impl IntoIterator<Item = FaceFactor>) -> Vec<FaceFactor> {
    let mut out: Vec<FaceFactor> = Vec::new();
    for f in faces {
        match out.last() {
            Some(last) if last.anchor == f.anchor && last.sign == -f.sign => {
                out.pop();
            }
            _ => out.push(f),
        }
    }
    out
}

fn invert_faces(faces: &[FaceFactor]) -> Vec<FaceFactor> {
    faces.iter().rev().map(FaceFactor::inverse).collect()
}

/// The genus-g surface group together with its memo tables.
pub struct Surface {
    g: usize,
    fuel: usize,
    // relators[0] = R, relators[1] = R^-1
    relators: [SurfWord; 2],
    // cyclic successor and position of each letter inside R^{+1} / R^{-1}, by rank
    succ: [Vec<SurfLetter>; 2],
    pos: [Vec<usize>; 2],
    nf_cache: RwLock<HashMap<SurfWord, SurfElem>>,
    edge_cache: RwLock<HashMap<(SurfElem, SurfLetter), Arc<Vec<FaceFactor>>>>,
}

impl fmt::Debug for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Surface").field("g", &self.g).field("fuel", &self.fuel).finish()
    }
}

impl Surface {
    pub fn new(g: usize) -> Surface {
        Surface::with_fuel(g, DEFAULT_FUEL)
    }

    pub fn with_fuel(g: usize, fuel: usize) -> Surface {
        assert!(g >= 1, "genus must be at least 1");
        let mut rel: SurfWord = (1..=2 * g).map(SurfLetter::gen).collect();
        rel.extend((1..=2 * g).map(|r| SurfLetter::new(r, -1)));
        let relators = [rel.clone(), invert_surf_word(&rel)];
        let len = 4 * g;
        let mut succ = [vec![SurfLetter::gen(1); len], vec![SurfLetter::gen(1); len]];
        let mut pos = [vec![0; len], vec![0; len]];
        for e in 0..2 {
            for p in 0..len {
                let x = relators[e][p];
                succ[e][x.rank()] = relators[e][(p + 1) % len];
                pos[e][x.rank()] = p;
            }
        }
        Surface {
            g,
            fuel,
            relators,
            succ,
            pos,
            nf_cache: RwLock::new(HashMap::new()),
            edge_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn fuel(&self) -> usize {
        self.fuel
    }

    pub fn relator_len(&self) -> usize {
        4 * self.g
    }

    /// The relator word for sign +1, its inverse for sign -1.
    pub fn relator(&self, sign: i8) -> &[SurfLetter] {
        &self.relators[usize::from(sign < 0)]
    }

    pub fn check_letter(&self, l: SurfLetter) -> Result<()> {
        if l.index() > 2 * self.g {
            return Err(Error::OutOfRange(format!("{l} for genus {}", self.g)));
        }
        Ok(())
    }

    pub fn normal_form(&self, w: &[SurfLetter]) -> Result<SurfElem> {
        for &l in w {
            self.check_letter(l)?;
        }
        if self.g == 1 {
            return Ok(self.torus_normal_form(w));
        }
        let w = reduce_free(w);
        if let Some(hit) = self.nf_cache.read().get(&w) {
            return Ok(hit.clone());
        }
        let nf = self.shortlex_geodesic(w.clone())?;
        self.nf_cache.write().insert(w, nf.clone());
        Ok(nf)
    }

    fn torus_normal_form(&self, w: &[SurfLetter]) -> SurfElem {
        let (mut a, mut b) = (0i64, 0i64);
        for l in w {
            if l.index() == 1 {
                a += l.sign() as i64;
            } else {
                b += l.sign() as i64;
            }
        }
        let power = |index: usize, e: i64| {
            let l = SurfLetter::new(index, if e < 0 { -1 } else { 1 });
            std::iter::repeat(l).take(e.unsigned_abs() as usize)
        };
        SurfElem(power(1, a).chain(power(2, b)).collect())
    }

    /// Length of the maximal run of `w` starting at `st` that is a subword of cyclic `R^e`.
    fn run_len(&self, w: &[SurfLetter], st: usize, e: usize, cap: usize) -> usize {
        let mut k = 1;
        while st + k < w.len() && k < cap && self.succ[e][w[st + k - 1].rank()] == w[st + k] {
            k += 1;
        }
        k
    }

    /// Replaces `w[st..st+k]`, a subword of cyclic `R^e`, by the inverse of its complement.
    fn swap_piece(&self, w: &[SurfLetter], st: usize, k: usize, e: usize) -> SurfWord {
        let len = self.relator_len();
        let p = self.pos[e][w[st].rank()];
        let mut out: SurfWord = w[..st].to_vec();
        out.extend((0..len - k).rev().map(|q| self.relators[e][(p + k + q) % len].inverse()));
        out.extend_from_slice(&w[st + k..]);
        reduce_free(&out)
    }

    /// Dehn's algorithm: remove every subword longer than half a relator.
    fn dehn_reduce(&self, w: SurfWord) -> SurfWord {
        let half = 2 * self.g;
        let mut w = reduce_free(&w);
        'outer: loop {
            for st in 0..w.len() {
                for e in 0..2 {
                    let k = self.run_len(&w, st, e, self.relator_len());
                    if k > half {
                        w = self.swap_piece(&w, st, k, e);
                        continue 'outer;
                    }
                }
            }
            return w;
        }
    }

    fn half_swaps(&self, w: &[SurfLetter]) -> Vec<SurfWord> {
        let half = 2 * self.g;
        let mut out = Vec::new();
        for st in 0..w.len() {
            for e in 0..2 {
                if self.run_len(w, st, e, half) == half {
                    out.push(self.swap_piece(w, st, half, e));
                }
            }
        }
        out
    }

    fn shortlex_geodesic(&self, w: SurfWord) -> Result<SurfElem> {
        let mut w = self.dehn_reduce(w);
        let mut fuel = self.fuel;
        'restart: loop {
            let mut seen: HashSet<SurfWord> = HashSet::new();
            seen.insert(w.clone());
            let mut frontier = vec![w.clone()];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for u in &frontier {
                    for v in self.half_swaps(u) {
                        let v = self.dehn_reduce(v);
                        if v.len() < w.len() {
                            w = v;
                            continue 'restart;
                        }
                        if seen.insert(v.clone()) {
                            fuel = fuel.checked_sub(1).ok_or(Error::FuelExhausted("normal form"))?;
                            next.push(v);
                        }
                    }
                }
                frontier = next;
            }
            let best = seen
                .into_iter()
                .min_by(|a, b| {
                    let ka = a.iter().map(|l| l.rank());
                    let kb = b.iter().map(|l| l.rank());
                    ka.cmp(kb)
                })
                .unwrap_or_default();
            return Ok(SurfElem(best));
        }
    }

    pub fn mul(&self, x: &SurfElem, y: &SurfElem) -> Result<SurfElem> {
        if y.is_identity() {
            return Ok(x.clone());
        }
        if x.is_identity() {
            return Ok(y.clone());
        }
        let mut w = x.0.clone();
        w.extend_from_slice(&y.0);
        self.normal_form(&w)
    }

    pub fn inv(&self, x: &SurfElem) -> Result<SurfElem> {
        self.normal_form(&invert_surf_word(&x.0))
    }

    pub fn mul_letter(&self, x: &SurfElem, l: SurfLetter) -> Result<SurfElem> {
        let mut w = x.0.clone();
        w.push(l);
        self.normal_form(&w)
    }

    pub fn letter_elem(&self, l: SurfLetter) -> Result<SurfElem> {
        self.normal_form(&[l])
    }

    /// True when the Cayley graph edge `gamma --l--> gamma.l` lies on the normal form tree.
    pub fn is_tree_edge(&self, gamma: &SurfElem, l: SurfLetter) -> Result<bool> {
        let target = self.mul_letter(gamma, l)?;
        Ok(tree_edge_between(gamma, &target, l))
    }

    pub fn expand_face_factor(&self, f: &FaceFactor) -> SurfWord {
        let mut w = f.anchor.0.clone();
        w.extend_from_slice(self.relator(f.sign));
        w.extend(invert_surf_word(&f.anchor.0));
        w
    }

    /// Writes a null word as an ordered product of anchored faces. The
    /// concatenated expansions are freely equal to `w`.
    pub fn fill_null_word(&self, w: &[SurfLetter]) -> Result<Vec<FaceFactor>> {
        let mut cur = SurfElem::identity();
        let mut faces = Vec::new();
        for &l in w {
            self.check_letter(l)?;
            faces.extend(self.fill_edge(&cur, l)?.iter().cloned());
            cur = self.mul_letter(&cur, l)?;
        }
        if !cur.is_identity() {
            return Err(Error::NotNull);
        }
        Ok(reduce_faces(faces))
    }

    /// Faces of the edge loop `gamma~ . l . (gamma l)~^-1`.
    pub fn fill_edge(&self, gamma: &SurfElem, l: SurfLetter) -> Result<Arc<Vec<FaceFactor>>> {
        self.fill_edge_below(gamma, l, usize::MAX)
    }

    // Every edge reached from an edge of height h has height < h; the bound
    // turns a violation of that into an error instead of unbounded recursion.
    fn fill_edge_below(&self, gamma: &SurfElem, l: SurfLetter, limit: usize) -> Result<Arc<Vec<FaceFactor>>> {
        let target = self.mul_letter(gamma, l)?;
        if tree_edge_between(gamma, &target, l) {
            return Ok(Arc::new(Vec::new()));
        }
        if target.len() < gamma.len() {
            let back = self.fill_edge_below(&target, l.inverse(), limit)?;
            return Ok(Arc::new(invert_faces(&back)));
        }
        let height = target.len();
        if height >= limit {
            return Err(Error::FuelExhausted("filling recursion"));
        }
        let key = (gamma.clone(), l);
        if let Some(hit) = self.edge_cache.read().get(&key) {
            return Ok(hit.clone());
        }
        let len = self.relator_len();
        let m = *target.0.last().expect("non-tree edge ends away from the base");
        let (e, p) = (0..2)
            .flat_map(|e| (0..len).map(move |p| (e, p)))
            .find(|&(e, p)| self.relators[e][p] == l && self.relators[e][(p + 1) % len] == m.inverse())
            .ok_or_else(|| Error::Inconsistent(format!("no face at corner {l} {}", m.inverse())))?;
        // Reading the face from gamma: rho = l m^-1 q. The face's own corner
        // is reached from gamma by walking the tail R^e[..p] backwards.
        let tail_back: SurfWord = self.relators[e][..p].iter().rev().map(|x| x.inverse()).collect();
        let (conj, corner) = self.path_faces(gamma, &tail_back, height)?;
        let rest: SurfWord = (1..len).map(|k| self.relators[e][(p + k) % len]).collect();
        let (around, end) = self.path_faces(&target, &rest, height)?;
        if end != *gamma {
            return Err(Error::Inconsistent("face boundary does not close".into()));
        }
        let mut faces = conj.clone();
        faces.push(FaceFactor {
            anchor: corner,
            sign: if e == 0 { 1 } else { -1 },
        });
        faces.extend(invert_faces(&conj));
        faces.extend(invert_faces(&around));
        let faces = Arc::new(reduce_faces(faces));
        self.edge_cache.write().insert(key, faces.clone());
        Ok(faces)
    }

    fn path_faces(&self, start: &SurfElem, path: &[SurfLetter], limit: usize) -> Result<(Vec<FaceFactor>, SurfElem)> {
        let mut cur = start.clone();
        let mut faces = Vec::new();
        for &x in path {
            faces.extend(self.fill_edge_below(&cur, x, limit)?.iter().cloned());
            cur = self.mul_letter(&cur, x)?;
        }
        Ok((faces, cur))
    }
}

fn tree_edge_between(gamma: &SurfElem, target: &SurfElem, l: SurfLetter) -> bool {
    let (g, t) = (&gamma.0, &target.0);
    (t.len() == g.len() + 1 && t[..g.len()] == g[..] && t[g.len()] == l)
        || (g.len() == t.len() + 1 && g[..t.len()] == t[..] && g[t.len()] == l.inverse())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &Surface, text: &str) -> SurfWord {
        parse_surf_word(text, s.genus()).unwrap()
    }

    #[test]
    fn free_reduction() {
        let s = Surface::new(1);
        assert!(reduce_free(&w(&s, "w1 w1^-1")).is_empty());
        assert_eq!(reduce_free(&w(&s, "w1 w2 w2^-1 w1")), w(&s, "w1 w1"));
        let rel = w(&s, "w1 w2 w1^-1 w2^-1");
        assert_eq!(reduce_free(&rel), rel);
    }

    #[test]
    fn torus_normal_forms() {
        let s = Surface::new(1);
        assert_eq!(s.normal_form(&w(&s, "w2 w1")).unwrap().word(), &w(&s, "w1 w2")[..]);
        assert!(s.normal_form(&w(&s, "w1 w2 w1^-1 w2^-1")).unwrap().is_identity());
        let x = s.normal_form(&w(&s, "w1 w2")).unwrap();
        let y = s.normal_form(&w(&s, "w2^-1")).unwrap();
        assert_eq!(s.mul(&x, &y).unwrap().word(), &w(&s, "w1")[..]);
    }

    #[test]
    fn genus_two_dehn_replacement() {
        let s = Surface::new(2);
        let long = s.normal_form(&w(&s, "w1 w2 w3 w4 w1^-1")).unwrap();
        let short = s.normal_form(&invert_surf_word(&w(&s, "w2^-1 w3^-1 w4^-1"))).unwrap();
        assert_eq!(long, short);
        assert_eq!(long.len(), 3);
        let x = s.normal_form(&w(&s, "w1 w2")).unwrap();
        assert!(s.mul(&s.inv(&x).unwrap(), &x).unwrap().is_identity());
    }

    #[test]
    fn tree_edges() {
        let s = Surface::new(1);
        let w1 = s.letter_elem(SurfLetter::gen(1)).unwrap();
        let w2 = s.letter_elem(SurfLetter::gen(2)).unwrap();
        assert!(s.is_tree_edge(&w1, SurfLetter::gen(1)).unwrap());
        assert!(!s.is_tree_edge(&w2, SurfLetter::gen(1)).unwrap());
        for g in 1..=2 {
            let s = Surface::new(g);
            for r in 1..=2 * g {
                for sign in [1, -1] {
                    assert!(s.is_tree_edge(&SurfElem::identity(), SurfLetter::new(r, sign)).unwrap());
                }
            }
        }
    }

    #[test]
    fn relator_fills_with_one_face() {
        for g in 1..=2 {
            let s = Surface::new(g);
            let faces = s.fill_null_word(s.relator(1)).unwrap();
            assert_eq!(faces, vec![FaceFactor { anchor: SurfElem::identity(), sign: 1 }]);
            let faces = s.fill_null_word(s.relator(-1)).unwrap();
            assert_eq!(faces, vec![FaceFactor { anchor: SurfElem::identity(), sign: -1 }]);
        }
        assert!(Surface::new(1).fill_null_word(&[]).unwrap().is_empty());
    }

    #[test]
    fn rectangle_loop() {
        let s = Surface::new(1);
        let loop_word = w(&s, "w1 w1 w2 w1^-1 w1^-1 w2^-1");
        let faces = s.fill_null_word(&loop_word).unwrap();
        assert_eq!(faces.len(), 2);
        let w1 = s.letter_elem(SurfLetter::gen(1)).unwrap();
        for f in &faces {
            assert!(f.anchor.is_identity() || f.anchor == w1);
        }
        let expanded: SurfWord = faces.iter().flat_map(|f| s.expand_face_factor(f)).collect();
        assert_eq!(reduce_free(&expanded), reduce_free(&loop_word));
    }

    #[test]
    fn not_null_is_rejected() {
        let s = Surface::new(2);
        assert_eq!(s.fill_null_word(&w(&s, "w1")), Err(Error::NotNull));
    }

    #[test]
    fn face_expansion() {
        let s = Surface::new(1);
        let f = FaceFactor { anchor: SurfElem::identity(), sign: 1 };
        assert_eq!(s.expand_face_factor(&f), w(&s, "w1 w2 w1^-1 w2^-1"));
        let s2 = Surface::new(2);
        let f = FaceFactor { anchor: SurfElem::identity(), sign: -1 };
        assert_eq!(s2.expand_face_factor(&f), invert_surf_word(s2.relator(1)));
        assert_eq!(s2.expand_face_factor(&f).len(), 8);
    }
}
