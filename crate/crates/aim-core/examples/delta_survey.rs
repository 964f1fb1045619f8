use aim_core::catalog::Catalog;

fn main() {
    let catalog = Catalog::standard();
    for entry in catalog.entries() {
        for n in 1..=3u32 {
            match entry.delta_closed_form_check(&entry.defaults, n) {
                Ok(Some(cmp)) => eprintln!(
                    "{:>18} n={}: equal={} sign_only={}",
                    entry.id,
                    n,
                    cmp.equal,
                    cmp.equal_up_to_sign && !cmp.equal
                ),
                Ok(None) => {}
                Err(e) => eprintln!("{:>18} n={}: error {e}", entry.id, n),
            }
        }
    }
}
