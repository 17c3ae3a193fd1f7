//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller pair criteria.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::polynomial::{Coefficient, Polynomial};

/// Terms sorted largest-first under a fixed monomial order.
pub(crate) type Terms = Vec<(Monomial, Coefficient)>;

pub(crate) fn sort_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t = p.terms().to_vec();
    t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    t
}

/// `p - c * m * g`, where `p` and `g` are sorted under `order`.
fn sub_scaled(
    p: &[(Monomial, Coefficient)],
    c: &Coefficient,
    m: &Monomial,
    g: &Terms,
    order: &MonomialOrder,
) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut shifted = None;
    while i < p.len() || j < g.len() {
        if j < g.len() && shifted.is_none() {
            shifted = Some(g[j].0.mul(m));
        }
        let ord = match (p.get(i), &shifted) {
            (Some(a), Some(b)) => order.cmp(&a.0, b),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((shifted.take().expect("pending term"), -(c * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &p[i].1 - c * &g[j].1;
                if !v.is_zero() {
                    out.push((shifted.take().expect("pending term"), v));
                } else {
                    shifted = None;
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Full reduction of `f` modulo `basis` (each element monic, sorted under `order`).
pub(crate) fn reduce(mut p: Terms, basis: &[&Terms], order: &MonomialOrder) -> Terms {
    let mut k = 0;
    while k < p.len() {
        let m = &p[k].0;
        let hit = basis.iter().find_map(|g| m.div(&g[0].0).map(|q| (q, *g)));
        match hit {
            Some((q, g)) => {
                let c = &p[k].1 / &g[0].1;
                let tail = sub_scaled(&p[k..], &c, &q, g, order);
                p.truncate(k);
                p.extend(tail);
            }
            None => k += 1,
        }
    }
    p
}

fn make_monic(mut p: Terms) -> Terms {
    if let Some((_, lc)) = p.first() {
        if !lc.is_one() {
            let inv = Coefficient::one() / lc;
            for (_, c) in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
    p
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'a> {
    order: &'a MonomialOrder,
    polys: Vec<Terms>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn active_basis(&self) -> Vec<&Terms> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Gebauer–Möller update after adding a new monic element.
    fn update(&mut self, h: Terms) {
        let hi = self.polys.len();
        self.polys.push(h);
        self.active.push(false);
        let lh = self.lm(hi).clone();

        let mut c: Vec<usize> = (0..hi).filter(|&g| self.active[g]).collect();
        c.reverse();
        let mut d: Vec<usize> = Vec::new();
        while let Some(g1) = c.pop() {
            let l1 = lh.lcm(self.lm(g1));
            let dominated = |g2: &usize| lh.lcm(self.lm(*g2)).divides(&l1);
            if lh.is_coprime(self.lm(g1)) || (!c.iter().any(dominated) && !d.iter().any(dominated))
            {
                d.push(g1);
            }
        }
        let fresh: Vec<Pair> = d
            .into_iter()
            .filter(|&g| !lh.is_coprime(self.lm(g)))
            .map(|g| Pair {
                i: g,
                j: hi,
                lcm: lh.lcm(self.lm(g)),
            })
            .collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && lh.lcm(&polys[p.i][0].0) != p.lcm
                && lh.lcm(&polys[p.j][0].0) != p.lcm)
        });
        self.pairs.extend(fresh);

        for g in 0..hi {
            if self.active[g] && lh.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.active[hi] = true;
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.lcm
                .degree()
                .cmp(&pb.lcm.degree())
                .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, p: &Pair) -> Terms {
        let (gi, gj) = (&self.polys[p.i], &self.polys[p.j]);
        let mi = p.lcm.div(&gi[0].0).expect("lcm divisible");
        let mj = p.lcm.div(&gj[0].0).expect("lcm divisible");
        let left: Terms = gi.iter().map(|(m, c)| (m.mul(&mi), c.clone())).collect();
        sub_scaled(&left, &Coefficient::one(), &mj, gj, self.order)
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `generators`.
///
/// The result is monic, interreduced and sorted by leading monomial, largest
/// first; each element's terms are sorted under `order`.
pub(crate) fn reduced_basis(generators: &[Polynomial], order: &MonomialOrder) -> Vec<Terms> {
    let n = generators.first().map(|g| g.ring().len()).unwrap_or(0);
    let mut st = State {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let unit = || vec![vec![(Monomial::one(n), Coefficient::one())]];

    let mut input: Vec<Terms> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| make_monic(sort_terms(g, order)))
        .collect();
    input.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    for f in input {
        let h = reduce(f, &st.active_basis(), order);
        if h.is_empty() {
            continue;
        }
        if h[0].0.is_one() {
            return unit();
        }
        st.update(make_monic(h));
    }

    while let Some(pair) = st.select() {
        let s = st.s_polynomial(&pair);
        let h = reduce(s, &st.active_basis(), order);
        if h.is_empty() {
            continue;
        }
        if h[0].0.is_one() {
            return unit();
        }
        st.update(make_monic(h));
    }

    let mut basis: Vec<Terms> = st
        .polys
        .iter()
        .zip(&st.active)
        .filter(|(_, &a)| a)
        .map(|(p, _)| p.clone())
        .collect();
    // interreduce tails; leading terms are already pairwise non-divisible
    for k in 0..basis.len() {
        let lead = basis[k][0].clone();
        let tail = basis[k][1..].to_vec();
        let others: Vec<&Terms> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, p)| p)
            .collect();
        let mut reduced = vec![lead];
        reduced.extend(reduce(tail, &others, order));
        basis[k] = reduced;
    }
    basis.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    basis
}

/// Whether every S-polynomial of `basis` reduces to zero modulo `basis`.
pub(crate) fn satisfies_buchberger_criterion(basis: &[Terms], order: &MonomialOrder) -> bool {
    let refs: Vec<&Terms> = basis.iter().collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (a, b) = (&basis[i], &basis[j]);
            let lcm = a[0].0.lcm(&b[0].0);
            let ma = lcm.div(&a[0].0).expect("divisible");
            let mb = lcm.div(&b[0].0).expect("divisible");
            let ca = Coefficient::one() / &a[0].1;
            let cb = &b[0].1.clone();
            let left: Terms = a.iter().map(|(m, c)| (m.mul(&ma), c * &ca)).collect();
            let s = sub_scaled(&left, &(Coefficient::one() / cb), &mb, b, order);
            if !reduce(s, &refs, order).is_empty() {
                return false;
            }
        }
    }
    true
}
