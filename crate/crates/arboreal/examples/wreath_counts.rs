//! Orders and full-cycle counts of iterated wreath products, checked
//! against brute-force enumeration for the small indices.

use arboreal::wreath::{enumerate, full_cycle_count, group_order, SphericalIndex};

fn main() -> arboreal::Result<()> {
    for d in [vec![2, 2], vec![3, 2], vec![2, 3], vec![2, 2, 2], vec![3, 3, 2], vec![2; 6]] {
        let index = SphericalIndex::new(d)?;
        let (order, full) = (group_order(&index), full_cycle_count(&index));
        print!("{:>14}  order {order:>12}  full cycles {full:>10}  ratio 1/{}", index.to_string(), index.leaf_count());
        if let Ok(elements) = enumerate(&index, 10_000) {
            let hits = elements.filter(|a| a.is_full_cycle_recursive()).count();
            print!("  (enumerated: {hits})");
        }
        println!();
    }
    Ok(())
}
