//! Holomorphic differentials: L(K) has dimension g and H^1(X, C) = 2 L(K).
//! The Riemann-Roch expression at K misses one copy of the trivial
//! representation, since K is special.

use hurwitz::rrmod::{canonical_discrepancy, canonical_module, h1};
use hurwitz::HurwitzContext;

fn main() -> hurwitz::Result<()> {
    for q in [13, 29, 41, 43, 71, 83, 97] {
        let ctx = HurwitzContext::new(q)?;
        let k = canonical_module(&ctx)?;
        let disc = canonical_discrepancy(&ctx)?;
        assert!(disc.is_single_trivial());
        println!(
            "q = {q:>2}: g = {:>5}, dim H^1 = {:>5}",
            k.dim(),
            h1(&ctx)?.dim()
        );
        if q == 13 {
            println!("         L(K) = {k}");
        }
    }
    Ok(())
}
