//! The ramification module, assembled from the three branch points and
//! compared with the case formula and with invariant dimensions.

use hurwitz::chartab::IrrepLabel;
use hurwitz::rrmod::{
    base_m, ramification_base_m, ramification_from_invariants, ramification_module,
};
use hurwitz::HurwitzContext;

fn main() -> hurwitz::Result<()> {
    for q in [13, 29, 83, 167, 337] {
        let ctx = HurwitzContext::new(q)?;
        let gamma = ramification_module(&ctx)?;
        assert_eq!(gamma.total, ramification_from_invariants(&ctx)?);
        println!(
            "q = {q:>3}: dim {:>9} = 85(g - 1), V x {} (q + floor/ceil(q/84) = {})",
            gamma.total.dim(),
            gamma.total.get(IrrepLabel::V),
            base_m(q)?,
        );
        assert_eq!(gamma.total.get(IrrepLabel::V), ramification_base_m(&ctx));
    }
    let ctx = HurwitzContext::new(13)?;
    let gamma = ramification_module(&ctx)?;
    println!(
        "\nq = 13\n  h2 = {}\n  h3 = {}\n  h7 = {}\n  total = {}",
        gamma.h2, gamma.h3, gamma.h7, gamma.total
    );
    Ok(())
}
