//! Words and automorphisms of finitely generated free groups.
//!
//! Generators are numbered from 1; a letter is a nonzero `i32` whose sign is
//! the exponent.

pub type FreeWord = Vec<i32>;

pub fn reduce(w: &[i32]) -> FreeWord {
    let mut out: FreeWord = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn invert(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|x| -x).collect()
}

/// `a . b`, freely reduced.
pub fn mul(a: &[i32], b: &[i32]) -> FreeWord {
    let mut out = reduce(a);
    for &x in b {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn power(x: i32, e: i64) -> FreeWord {
    let l = if e < 0 { -x } else { x };
    vec![l; e.unsigned_abs() as usize]
}

/// An endomorphism given by the images of the generators `1..=rank`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Automorphism {
    images: Vec<FreeWord>,
}

impl Automorphism {
    pub fn identity(rank: usize) -> Automorphism {
        Automorphism {
            images: (1..=rank as i32).map(|x| vec![x]).collect(),
        }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Automorphism {
        Automorphism {
            images: images.iter().map(|w| reduce(w)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, x: i32) -> FreeWord {
        let w = &self.images[x.unsigned_abs() as usize - 1];
        if x > 0 {
            w.clone()
        } else {
            invert(w)
        }
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn apply(&self, w: &[i32]) -> FreeWord {
        let mut out = Vec::new();
        for &x in w {
            let img = &self.images[x.unsigned_abs() as usize - 1];
            if x > 0 {
                for &y in img {
                    push_reduced(&mut out, y);
                }
            } else {
                for &y in img.iter().rev() {
                    push_reduced(&mut out, -y);
                }
            }
        }
        out
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, w)| w.len() == 1 && w[0] == k as i32 + 1)
    }

    /// Inverse by Stallings folding of the rose spanned by the images. Every
    /// petal starts with an edge tagged by its generator; folding carries the
    /// tags along as words, and the final rose reads off the inverse images.
    pub fn inverse(&self) -> Option<Automorphism> {
        let rank = self.rank();
        let mut edges: Vec<FoldEdge> = Vec::new();
        let mut vertices = 1usize;
        for (k, w) in self.images.iter().enumerate() {
            if w.is_empty() {
                return None;
            }
            let mut cur = 0usize;
            for (p, &l) in w.iter().enumerate() {
                let next = if p + 1 == w.len() {
                    0
                } else {
                    vertices += 1;
                    vertices - 1
                };
                let tag: FreeWord = if p == 0 { vec![k as i32 + 1] } else { Vec::new() };
                if l > 0 {
                    edges.push(FoldEdge { from: cur, to: next, label: l, tag });
                } else {
                    edges.push(FoldEdge { from: next, to: cur, label: -l, tag: invert(&tag) });
                }
                cur = next;
            }
        }
        while let Some((a, b, outgoing)) = find_fold(&edges) {
            let (ea, eb) = (&edges[a], &edges[b]);
            let (keep, mut gone, mut delta) = if outgoing {
                (ea.to, eb.to, mul(&invert(&ea.tag), &eb.tag))
            } else {
                (ea.from, eb.from, mul(&ea.tag, &invert(&eb.tag)))
            };
            let mut keep = keep;
            if keep == gone {
                if !delta.is_empty() {
                    return None;
                }
                edges.remove(b);
                continue;
            }
            if gone == 0 {
                std::mem::swap(&mut keep, &mut gone);
                delta = invert(&delta);
            }
            edges.remove(b);
            let delta_inv = invert(&delta);
            for e in edges.iter_mut() {
                if e.from == gone {
                    e.tag = mul(&delta, &e.tag);
                    e.from = keep;
                }
                if e.to == gone {
                    e.tag = mul(&e.tag, &delta_inv);
                    e.to = keep;
                }
            }
        }
        if edges.len() != rank || edges.iter().any(|e| e.from != 0 || e.to != 0) {
            return None;
        }
        let mut images = vec![Vec::new(); rank];
        for e in edges {
            images[e.label as usize - 1] = e.tag;
        }
        let inv = Automorphism { images };
        if self.compose(&inv).is_identity() {
            Some(inv)
        } else {
            None
        }
    }

    /// The element `c` with `self(x) = c x c^-1` for every generator, when
    /// `self` is inner. Requires rank >= 2 for uniqueness.
    pub fn inner_conjugator(&self) -> Option<FreeWord> {
        let im = &self.images[0];
        if im.len() % 2 == 0 || im[im.len() / 2] != 1 {
            return None;
        }
        let u = &im[..im.len() / 2];
        let bound = self.images.iter().map(Vec::len).sum::<usize>() as i64 + 2;
        (-bound..=bound).map(|m| mul(u, &power(1, m))).find(|c| {
            let c_inv = invert(c);
            self.images
                .iter()
                .enumerate()
                .all(|(k, img)| *img == mul(&mul(c, &[k as i32 + 1]), &c_inv))
        })
    }
}

fn push_reduced(out: &mut FreeWord, y: i32) {
    if out.last() == Some(&-y) {
        out.pop();
    } else {
        out.push(y);
    }
}

struct FoldEdge {
    from: usize,
    to: usize,
    label: i32,
    tag: FreeWord,
}

fn find_fold(edges: &[FoldEdge]) -> Option<(usize, usize, bool)> {
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            if edges[a].label != edges[b].label {
                continue;
            }
            if edges[a].from == edges[b].from {
                return Some((a, b, true));
            }
            if edges[a].to == edges[b].to {
                return Some((a, b, false));
            }
        }
    }
    None
}
