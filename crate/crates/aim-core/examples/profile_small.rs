use aim_core::catalog::Catalog;
use aim_core::engine::{aim_step, delta};

fn main() {
    let catalog = Catalog::standard();
    let entry = catalog.get("cauchy_euler_gen").unwrap();
    let eq = entry.make_equation(&entry.defaults, None).unwrap();
    let mut l = eq.lambda0().clone();
    let mut s = eq.s0().clone();
    for _k in 1..=7 {
        let (nl, ns) = aim_step(&l, &s, &eq);
        let d = delta(&nl, &ns, &l, &s);
        std::hint::black_box(&d);
        l = nl;
        s = ns;
    }
}
