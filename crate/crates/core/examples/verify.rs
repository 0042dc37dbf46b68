//! Run the self-consistency suites for one q and print the report.
//!
//! ```text
//! cargo run --release --example verify -- 83
//! ```

fn main() -> hurwitz::Result<()> {
    let q: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(13);
    let report = hurwitz::verify::verify(q, false)?;
    print!("{}", report.to_table());
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
