//! Which prime powers q give a Hurwitz curve with automorphism group PSL(2, q).
//!
//! ```text
//! cargo run --example classify -- 200
//! ```

use hurwitz::psl2::classify_q;

fn main() {
    let bound: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200);
    println!(
        "{:>6} {:>4} {:>4} {:>12} {:>10}",
        "q", "p", "n", "|G|", "genus"
    );
    for q in 2..=bound {
        if let Ok(info) = classify_q(q) {
            let order = q * (q * q - 1) / 2;
            println!(
                "{q:>6} {:>4} {:>4} {order:>12} {:>10}",
                info.p,
                info.n,
                1 + order / 84
            );
        }
    }
    for q in [7, 8, 27, 343] {
        println!("{q}: {}", classify_q(q).unwrap_err());
    }
}
