//! Reading and writing designs as .des text and JSON.

use embedrank::geometry::pg_design;
use embedrank::IncidenceStructure;

fn main() -> embedrank::Result<()> {
    let fano = pg_design(2, 2, 1)?;
    let des = fano.to_des();
    print!("{des}");
    let json = fano.to_json();
    println!("{json}");
    let back = IncidenceStructure::parse_any(&json)?;
    assert_eq!(back.to_des(), des);
    assert_eq!(IncidenceStructure::from_des(&des)?.blocks(), fano.blocks());
    Ok(())
}
