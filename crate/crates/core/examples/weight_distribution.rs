//! Weight distribution of the binary code spanned by the incidence matrix of
//! the size-12 residual blocks of AG_2(3,4), as CSV.

use embedrank::codes::LinearCode;
use embedrank::geometry::ag_design;

fn main() -> embedrank::Result<()> {
    let ag = ag_design(3, 4, 2)?.0;
    let dprime = ag.good_block(0)?.expect("good").dprime;
    let code = LinearCode::from_rows(&dprime.incidence_matrix(2)?);
    eprintln!("[{}, {}] code", code.length(), code.dim());
    print!("{}", code.weight_distribution()?.to_csv());
    Ok(())
}
