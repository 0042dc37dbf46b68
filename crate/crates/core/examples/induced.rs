//! Induce the characters of the cyclic subgroups of order 2, 3 and 7 up to
//! PSL(2, q), three ways: closed form, Frobenius reciprocity, and (for small
//! groups) explicit class fusion.

use hurwitz::induce::{induced_brute_force, induced_closed_form, induced_oracle, InducedQuery};
use hurwitz::HurwitzContext;

fn main() -> hurwitz::Result<()> {
    for q in [13, 29, 43] {
        let ctx = HurwitzContext::new(q)?;
        println!("q = {q}");
        for query in InducedQuery::all() {
            let closed = induced_closed_form(&ctx, query)?;
            assert_eq!(closed, induced_oracle(&ctx, query)?);
            if q == 13 {
                assert_eq!(closed, induced_brute_force(&ctx, query)?);
            }
            println!("  Ind theta_{}^{} = {closed}", query.l, query.k);
        }
    }
    Ok(())
}
