//! Print the exact character table of PSL(2, 13) and check both
//! orthogonality relations.

use hurwitz::chartab::character_table;
use hurwitz::HurwitzContext;

fn main() -> hurwitz::Result<()> {
    let ctx = HurwitzContext::new(13)?;
    let table = character_table(&ctx)?;
    table.check_row_orthogonality()?;
    table.check_column_orthogonality()?;
    print!("{}", table.dump());
    Ok(())
}
