//! Decompose L(D) for invariant divisors D = r1 G + r2 D2 + r3 D3 + r7 D7.

use hurwitz::rrmod::{equivariant_degree, riemann_roch, Divisor};
use hurwitz::HurwitzContext;

fn main() -> hurwitz::Result<()> {
    let ctx = HurwitzContext::new(13)?;
    let g = ctx.genus() as i128;
    for d in [
        Divisor::new(0, 0, 0, 1),
        Divisor::new(0, 1, 0, 0),
        Divisor::new(0, 1, 2, 6),
        Divisor::new(1, 0, 0, 0),
    ] {
        let deg = d.degree(ctx.order());
        let l = riemann_roch(&ctx, d)?;
        assert_eq!(l.dim(), deg + 1 - g);
        println!("D = {d}, deg {deg}");
        println!("  deg_eq = {}", equivariant_degree(&ctx, d)?);
        println!("  L(D)   = {l}  (dim {})", l.dim());
    }
    match riemann_roch(&ctx, Divisor::new(-1, 0, 0, 6)) {
        Err(e) => println!("D = (-1, 0, 0, 6): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
