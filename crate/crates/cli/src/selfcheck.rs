//! Consistency suites run by `sbv selfcheck`.

use std::sync::Arc;

use anyhow::Result;
use surface_vassiliev::braid_words::{artin_image, relation_table, Ambient, BraidWord, Letter, Relation};
use surface_vassiliev::coset_split::k_part;
use surface_vassiliev::diagram_algebra::UniversalInvariant;
use surface_vassiliev::surface_group::{reduce_free, SurfElem, SurfLetter, SurfWord, Surface};

pub struct Suite {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
}

impl Suite {
    fn new(name: &'static str) -> Suite {
        Suite { name, passed: 0, failed: 0 }
    }

    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

/// Every right-hand side picks up an extra `t[1,2]`; used as a negative control.
fn corrupt(table: &mut [Relation]) {
    for r in table {
        r.rhs.push(Letter::t(1, 2));
    }
}

fn inverse(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inv()).collect()
}

fn f_word(i: usize, j: usize, gamma: &SurfElem) -> Vec<Letter> {
    let gw: Vec<Letter> = gamma.word().iter().map(|l| Letter::a(i, l.index()).pow(l.sign())).collect();
    let mut w = gw.clone();
    w.push(Letter::t(i, j));
    w.extend(inverse(&gw));
    w
}

fn commutator(a: &[Letter], b: &[Letter]) -> Vec<Letter> {
    [a, b, &inverse(a), &inverse(b)].concat()
}

pub fn run(n: usize, g: usize, degree: usize, fuel: usize, corrupt_table: bool) -> Result<Vec<Suite>> {
    let surf = Arc::new(Surface::with_fuel(g, fuel));
    let u = UniversalInvariant::new(surf.clone(), degree)?.with_verification(true);
    let amb = Ambient::new(n, g);
    let word = |letters: Vec<Letter>| BraidWord::new(amb, letters);
    let mut table = if n >= 2 { relation_table(n, g) } else { Vec::new() };
    if corrupt_table {
        corrupt(&mut table);
    }

    let mut relations = Suite::new("relation invariance");
    let mut conjugated = Suite::new("conjugated relations");
    let mut combing = Suite::new("combing oracle");
    for r in &table {
        let (lhs, rhs) = (word(r.lhs.clone())?, word(r.rhs.clone())?);
        relations.record(u.u_of(&lhs).ok() == Some(u.u_of(&rhs)?));
        combing.record(u.combing().decompose(&k_part(&surf, &lhs)?).is_ok());
        for k in 1..n {
            let s = Letter::sigma(k);
            let conj = |w: &[Letter]| word([&[s], w, &[s.inv()]].concat());
            let (a, b) = (conj(&r.lhs)?, conj(&r.rhs)?);
            let da = u.combing().decompose(&k_part(&surf, &a)?)?;
            conjugated.record(u.combing().decompose(&k_part(&surf, &b)?).ok() == Some(da));
        }
    }

    let mut disc = Suite::new("disc oracle");
    for r in table.iter().filter(|r| r.family == "sigma_t") {
        disc.record(artin_image(&word(r.lhs.clone())?)? == artin_image(&word(r.rhs.clone())?)?);
    }

    let mut filling = Suite::new("filling oracle");
    let letters: Vec<SurfLetter> = (1..=2 * g).flat_map(|i| [SurfLetter::new(i, 1), SurfLetter::new(i, -1)]).collect();
    let mut prefixes: Vec<SurfWord> = vec![Vec::new()];
    prefixes.extend(letters.iter().map(|&l| vec![l]));
    for &a in &letters {
        for &b in &letters {
            if b != a.inverse() {
                prefixes.push(vec![a, b]);
            }
        }
    }
    for p in &prefixes {
        for sign in [1, -1] {
            let rel = surf.relator(sign);
            for k in 0..rel.len() {
                let mut w = p.clone();
                w.extend(rel[k..].iter().chain(&rel[..k]));
                w.extend(p.iter().rev().map(|l| l.inverse()));
                let ok = match surf.fill_null_word(&w) {
                    Ok(faces) => {
                        let e: SurfWord = faces.iter().flat_map(|f| surf.expand_face_factor(f)).collect();
                        reduce_free(&e) == reduce_free(&w)
                    }
                    Err(_) => false,
                };
                filling.record(ok);
            }
        }
    }

    let mut congruences = Suite::new("Lie congruences");
    let top = degree.min(2);
    let vanishes = |w: Vec<Letter>| -> Result<bool> {
        let x = u.u_of(&word(w)?)?;
        Ok((1..=top).all(|d| x.graded_part(d).is_zero()))
    };
    let labels = [SurfElem::identity(), surf.letter_elem(SurfLetter::gen(1))?];
    let triples = [(1, 2, 3), (2, 3, 1), (3, 1, 2), (1, 3, 2), (3, 2, 1), (2, 1, 3)];
    for &(i, j, k) in triples.iter().filter(|_| n >= 3) {
        for gamma in &labels {
            for delta in &labels {
                let gd = surf.mul(gamma, delta)?;
                let lhs = commutator(&f_word(i, j, gamma), &f_word(j, k, delta));
                let rhs = commutator(&f_word(i, k, &gd), &f_word(i, j, gamma));
                congruences.record(vanishes([lhs, inverse(&rhs)].concat())?);
            }
        }
    }
    if n >= 4 {
        for gamma in &labels {
            for delta in &labels {
                congruences.record(vanishes(commutator(&f_word(1, 3, gamma), &f_word(2, 4, delta)))?);
            }
        }
    }

    Ok(vec![relations, conjugated, combing, disc, filling, congruences])
}
