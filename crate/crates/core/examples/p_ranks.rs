//! p-ranks of incidence matrices of geometric designs, and of their residuals.

use embedrank::geometry::{ag_design, pg_design};

fn main() -> embedrank::Result<()> {
    let cases = [
        ("AG_1(2,2)", ag_design(2, 2, 1)?.0, 2),
        ("AG_1(2,3)", ag_design(2, 3, 1)?.0, 3),
        ("AG_2(3,4)", ag_design(3, 4, 2)?.0, 2),
        ("PG_1(2,2)", pg_design(2, 2, 1)?, 2),
        ("PG_2(3,4)", pg_design(3, 4, 2)?, 2),
    ];
    println!(
        "{:<10} {:>2} {:>6} {:>10}",
        "design", "p", "rank", "residual"
    );
    for (name, d, p) in cases {
        let full = d.incidence_matrix(p)?.rank();
        let res = d.residual(0, false)?.incidence_matrix(p)?.rank();
        println!("{name:<10} {p:>2} {full:>6} {res:>10}");
    }
    Ok(())
}
