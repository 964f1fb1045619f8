use aim_core::catalog::Catalog;
use aim_core::engine::{eigen_condition, trace_to};
use std::time::Instant;

fn main() {
    eprintln!("building catalog...");
    let catalog = Catalog::standard();
    eprintln!("catalog built with {} entries", catalog.entries().len());
    for entry in catalog.entries() {
        let t0 = Instant::now();
        let eq = match entry.make_equation(&entry.defaults, None) {
            Ok(eq) => eq,
            Err(e) => {
                eprintln!("{}: build error {e}", entry.id);
                continue;
            }
        };
        eprintln!("{:>18} built in {:?}", entry.id, t0.elapsed());
        for step in [1usize, 2, 3, 4, 6, 8] {
            let t0 = Instant::now();
            let tr = trace_to(&eq, step, 512);
            let dt_trace = t0.elapsed();
            let t1 = Instant::now();
            let r = eigen_condition(&eq, step);
            let dt = t1.elapsed();
            drop(tr);
            eprintln!(
                "{:>18} step {:>2}: trace {:>9.3?} eigen {:>9.3?} {}",
                entry.id,
                step,
                dt_trace,
                dt,
                r.map(|c| format!("roots {:?}", c.rational_roots))
                    .unwrap_or_else(|e| format!("err {e}"))
            );
            if dt.as_secs() > 5 {
                break;
            }
        }
    }
}
