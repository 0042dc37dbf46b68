//! Galois action on the irreducibles of PSL(2, q), and the shortcut for
//! L(D) when the divisor's D7 part is Galois stable.

use hurwitz::chartab::irreps;
use hurwitz::galois::{fast_ld, generators, is_invariant, permute_label};
use hurwitz::rrmod::{ramification_module, riemann_roch, Divisor};
use hurwitz::HurwitzContext;

fn main() -> hurwitz::Result<()> {
    let ctx = HurwitzContext::new(29)?;
    for j in generators(&ctx) {
        let moved: Vec<String> = irreps(29)
            .into_iter()
            .filter_map(|(l, _)| {
                let image = permute_label(&ctx, j as i64, l).ok()?;
                (image != l).then(|| format!("{l}->{image}"))
            })
            .collect();
        println!("sigma_{j}: {}", moved.join(" "));
    }
    let gamma = ramification_module(&ctx)?.total;
    println!("Gamma invariant: {}", is_invariant(&ctx, &gamma)?.is_none());
    for d in [Divisor::new(0, 0, 0, 3), Divisor::new(1, 1, 2, 6)] {
        assert_eq!(fast_ld(&ctx, d)?, riemann_roch(&ctx, d)?);
        println!("fast L{d} agrees with the assembly");
    }
    Ok(())
}
