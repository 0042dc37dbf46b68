//! Exact arithmetic in the cyclotomic field Q(zeta_84).

use hurwitz::cyclo::Cyc;

fn main() -> hurwitz::Result<()> {
    let z7 = Cyc::root_of_unity(7, 1)?;
    let sum = Cyc::sum((0..7).map(|e| Cyc::root_of_unity(7, e).unwrap()));
    println!("1 + z7 + ... + z7^6 = {}", sum.to_canonical_string());

    // Gauss period for the squares mod 7
    let eta = Cyc::sum([1, 2, 4].map(|e| Cyc::root_of_unity(7, e).unwrap()));
    let eta2 = eta.conj();
    println!("eta = {}", eta.to_canonical_string());
    println!("eta + conj(eta) = {}", (&eta + &eta2).to_canonical_string());
    println!("eta * conj(eta) = {}", (&eta * &eta2).to_canonical_string());

    let g = z7.galois(3)?;
    println!("sigma_3(z7) = {}", g.to_canonical_string());
    let back = Cyc::parse(g.conductor(), &g.to_canonical_string())?;
    assert_eq!(back, g);
    Ok(())
}
