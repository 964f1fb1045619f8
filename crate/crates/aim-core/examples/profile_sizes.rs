use aim_core::algebra::XRat;
use aim_core::catalog::Catalog;
use aim_core::engine::{aim_step, delta};
use std::time::Instant;

fn stats(v: &XRat) -> (usize, usize, usize, u64) {
    let mut tdeg = 0usize;
    let mut bits = 0u64;
    for p in [v.num(), v.den()] {
        for c in p.coeffs() {
            for q in [c.num(), c.den()] {
                tdeg = tdeg.max(q.degree_or_zero());
                for s in q.coeffs() {
                    bits = bits.max(s.numer().bits()).max(s.denom().bits());
                }
            }
        }
    }
    (v.num().degree_or_zero(), v.den().degree_or_zero(), tdeg, bits)
}

fn main() {
    let catalog = Catalog::standard();
    let entry = catalog.get("cauchy_euler_gen").unwrap();
    let eq = entry.make_equation(&entry.defaults, None).unwrap();
    let mut l = eq.lambda0().clone();
    let mut s = eq.s0().clone();
    for k in 1..=7 {
        let t0 = Instant::now();
        let (nl, ns) = aim_step(&l, &s, &eq);
        let d = delta(&nl, &ns, &l, &s);
        let dt = t0.elapsed();
        l = nl;
        s = ns;
        let (a, b, c, d1) = stats(&l);
        let (e, f, g, h) = stats(&s);
        let (i, j, kk, m) = stats(&d);
        eprintln!(
            "step {k}: {dt:>9.3?}  l: x{a}/{b} t{c} bits{d1}  s: x{e}/{f} t{g} bits{h}  delta: x{i}/{j} t{kk} bits{m}"
        );
    }
}
