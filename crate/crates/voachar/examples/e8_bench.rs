use std::time::Instant;
fn main() {
    let l = voachar::lattice::e8();
    let t0 = Instant::now();
    let t = voachar::lattice::theta(&l, 20);
    println!("theta(E8, 20) in {:?}", t0.elapsed());
    println!("q^19 coeff = {}", t.coefficient_int(19).unwrap());
    let u: Vec<voachar::Q> = (0..8).map(|i| voachar::rational::qi(if i == 0 { 1 } else { 0 })).collect();
    let t1 = Instant::now();
    let w = voachar::lattice::weighted_theta(&l, &u, &u, 12);
    println!("weighted theta(E8, 12) in {:?}", t1.elapsed());
    println!("q^1 coeff = {}", w.coefficient_int(1).unwrap());
}
