use std::sync::Arc;

use surface_vassiliev::braid_words::{relation_table, Ambient, BraidWord, Letter};
use surface_vassiliev::combing::{Combing, KDecomposition};
use surface_vassiliev::coset_split::k_part;
use surface_vassiliev::surface_group::Surface;

fn kernel_decomposition(c: &Combing, amb: Ambient, letters: Vec<Letter>) -> KDecomposition {
    let w = BraidWord::new(amb, letters).unwrap();
    let k = k_part(c.surface(), &w).unwrap();
    c.decompose(&k).unwrap()
}

fn conj(k: usize, w: &[Letter]) -> Vec<Letter> {
    let mut out = vec![Letter::sigma(k)];
    out.extend_from_slice(w);
    out.push(Letter::sigma(k).inv());
    out
}

#[test]
fn both_sides_of_every_relation_decompose_alike() {
    for (g, n) in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3)] {
        let c = Combing::new(Arc::new(Surface::new(g))).with_verification(true);
        let amb = Ambient::new(n, g);
        for rel in relation_table(n, g) {
            let lhs = kernel_decomposition(&c, amb, rel.lhs.clone());
            let rhs = kernel_decomposition(&c, amb, rel.rhs.clone());
            assert_eq!(lhs, rhs, "{} g={g} n={n}: {:?}", rel.family, rel.lhs);
            for k in 1..n {
                let lhs = kernel_decomposition(&c, amb, conj(k, &rel.lhs));
                let rhs = kernel_decomposition(&c, amb, conj(k, &rel.rhs));
                assert_eq!(lhs, rhs, "s[{k}]-conjugate of {} g={g} n={n}: {:?}", rel.family, rel.lhs);
            }
        }
    }
}
