use symplectica::canonical::canonical_basis;
use symplectica::tabloid::Shape;
use symplectica::weight::Weight;

fn main() {
    let shape = Shape::new(vec![1, 1, 2]);
    let weight = Weight(vec![0, -3, 0]);
    let basis = canonical_basis(3, &shape, &weight).unwrap();
    eprintln!("tableaux: {}  tabloids: {}", basis.tableaux.len(), basis.tabloids.len());
    // paper order: descending
    let cols: Vec<usize> = (0..basis.tableaux.len()).rev().collect();
    let rows: Vec<usize> = (0..basis.tabloids.len()).rev().collect();
    for &c in &cols {
        println!("# col {}", basis.tableaux[c]);
    }
    for &r in &rows {
        let entries: Vec<String> = cols.iter().map(|&c| basis.entry(r, c).to_string()).collect();
        println!("{} ; {}", basis.tabloids[r], entries.join(" ; "));
    }
}
