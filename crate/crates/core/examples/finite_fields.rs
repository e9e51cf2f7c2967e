//! Arithmetic in GF(4) and GF(9), and ranks of matrices over GF(p).

use embedrank::algebra::{FieldSpec, MatGFp};

fn main() -> embedrank::Result<()> {
    let f = FieldSpec::of_order(4)?;
    println!("GF(4) = GF({})[x] / {:?}", f.p(), f.irreducible());
    println!("multiplication table by index:");
    for a in 0..4 {
        let row: Vec<u32> = (0..4).map(|b| f.mul_idx(a, b)).collect();
        println!("  {row:?}");
    }

    let g = FieldSpec::of_order(9)?;
    let x = g.element(&[0, 1])?;
    let order = (1..9).find(|&k| g.pow(&x, k).map(|y| y == g.one()).unwrap_or(false));
    println!("in GF(9) the class of x has multiplicative order {order:?}");
    println!("inverse of x: {:?}", g.inv(&x)?.coeffs());

    let m = MatGFp::from_rows(3, 3, &[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 1]])?;
    println!("rank over GF(3): {}", m.rank());
    let (r, pivots) = m.rref();
    println!(
        "pivot columns {pivots:?}, reduced rows {:?}",
        (0..r.rows()).map(|i| r.row(i)).collect::<Vec<_>>()
    );
    Ok(())
}
