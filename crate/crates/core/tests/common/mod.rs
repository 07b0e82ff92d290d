#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use surface_vassiliev::braid_words::{Ambient, BraidWord, Letter, SingularLetter, SingularWord};
use surface_vassiliev::combing::{FreeBasisWord, FreeGenLetter};
use surface_vassiliev::diagram_algebra::{AElem, Chord, DiagramAlgebra, Monomial};
use surface_vassiliev::surface_group::{reduce_free, SurfElem, SurfLetter, SurfWord, Surface};

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_letter(r: &mut ChaCha8Rng, amb: Ambient) -> Letter {
    let sign = if r.gen_bool(0.5) { 1 } else { -1 };
    let l = if amb.n >= 2 && r.gen_bool(0.5) {
        Letter::sigma(r.gen_range(1..amb.n))
    } else {
        Letter::a(r.gen_range(1..=amb.n), r.gen_range(1..=2 * amb.g))
    };
    l.pow(sign)
}

pub fn random_word(r: &mut ChaCha8Rng, amb: Ambient, len: usize) -> BraidWord {
    BraidWord { amb, letters: (0..len).map(|_| random_letter(r, amb)).collect() }
}

/// A word with `d` singular letters spread among `plain` braid letters.
pub fn random_singular(r: &mut ChaCha8Rng, amb: Ambient, d: usize, plain: usize) -> SingularWord {
    let mut letters: Vec<SingularLetter> = (0..plain).map(|_| SingularLetter::Plain(random_letter(r, amb))).collect();
    for _ in 0..d {
        let at = r.gen_range(0..=letters.len());
        letters.insert(at, SingularLetter::Tau(r.gen_range(1..amb.n)));
    }
    SingularWord { amb, letters }
}

pub fn random_surf_letter(r: &mut ChaCha8Rng, g: usize) -> SurfLetter {
    SurfLetter::new(r.gen_range(1..=2 * g), if r.gen_bool(0.5) { 1 } else { -1 })
}

/// Random element of length at most `radius`, in normal form.
pub fn random_label(r: &mut ChaCha8Rng, surf: &Surface, radius: usize) -> SurfElem {
    let len = r.gen_range(0..=radius);
    let w: SurfWord = (0..len).map(|_| random_surf_letter(r, surf.genus())).collect();
    surf.normal_form(&w).unwrap()
}

/// A null-homotopic word of length at most `max_len`, built from cancelling
/// pairs and cyclic rotations of the relator and its inverse.
pub fn random_null_word(r: &mut ChaCha8Rng, surf: &Surface, max_len: usize) -> SurfWord {
    let mut w: SurfWord = Vec::new();
    loop {
        let piece: SurfWord = if r.gen_bool(0.5) {
            let rel = surf.relator(if r.gen_bool(0.5) { 1 } else { -1 });
            let k = r.gen_range(0..rel.len());
            rel[k..].iter().chain(&rel[..k]).copied().collect()
        } else {
            let x = random_surf_letter(r, surf.genus());
            vec![x, x.inverse()]
        };
        if w.len() + piece.len() > max_len {
            break;
        }
        let at = r.gen_range(0..=w.len());
        w.splice(at..at, piece);
    }
    if r.gen_bool(0.5) {
        w = reduce_free(&w);
    }
    w
}

pub fn random_chord(r: &mut ChaCha8Rng, alg: &DiagramAlgebra, n: usize, radius: usize) -> Chord {
    let i = r.gen_range(1..=n);
    let mut j = r.gen_range(1..n);
    if j >= i {
        j += 1;
    }
    let gamma = random_label(r, alg.surface(), radius);
    alg.chord(i, j, &gamma).unwrap()
}

pub fn random_monomial(r: &mut ChaCha8Rng, alg: &DiagramAlgebra, n: usize, max_deg: usize, radius: usize) -> Monomial {
    let d = r.gen_range(0..=max_deg);
    (0..d).map(|_| random_chord(r, alg, n, radius)).collect()
}

/// A small integer combination of straightened monomials.
pub fn random_aelem(r: &mut ChaCha8Rng, alg: &DiagramAlgebra, n: usize, max_deg: usize) -> AElem {
    let mut x = AElem::zero(alg.degree());
    for _ in 0..r.gen_range(1..=3) {
        let m = random_monomial(r, alg, n, max_deg, 2);
        let c: i64 = *[-2i64, -1, 1, 3].choose(r).unwrap();
        x.add(&alg.straighten(&m).unwrap(), &c.into());
    }
    x
}

pub fn random_free_basis_word(r: &mut ChaCha8Rng, surf: &Surface, n: usize, len: usize) -> FreeBasisWord {
    let level = r.gen_range(1..n);
    let letters = (0..len)
        .map(|_| FreeGenLetter {
            level,
            j: r.gen_range(level + 1..=n),
            gamma: random_label(r, surf, 3),
            sign: if r.gen_bool(0.5) { 1 } else { -1 },
        })
        .collect();
    FreeBasisWord { level, letters }
}

/// The braid word `gamma~ t_{i,j} gamma~^-1` with `gamma~` on strand `i`; any `i != j`.
pub fn f_word(i: usize, j: usize, gamma: &SurfElem, sign: i8) -> Vec<Letter> {
    let gw: Vec<Letter> = gamma.word().iter().map(|l| Letter::a(i, l.index()).pow(l.sign())).collect();
    let mut w = gw.clone();
    w.push(Letter::t(i, j).pow(sign));
    w.extend(gw.iter().rev().map(|l| l.inv()));
    w
}

pub fn inverse(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inv()).collect()
}

pub fn commutator(a: &[Letter], b: &[Letter]) -> Vec<Letter> {
    [a, b, &inverse(a), &inverse(b)].concat()
}
