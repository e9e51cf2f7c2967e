//! Recomputes one stored result, chosen by the first argument
//! (table1, table2, section5 or section6), and compares it with the expected values.

use embedrank::reproduce::{reproduce, Target};

fn main() -> embedrank::Result<()> {
    let target = match std::env::args().nth(1).as_deref() {
        Some("table2") => Target::Table2,
        Some("section5") => Target::Section5,
        Some("section6") => Target::Section6,
        _ => Target::Table1,
    };
    let report = reproduce(target)?;
    print!("{}", report.to_text());
    println!("all match: {}", report.ok());
    Ok(())
}
