use voachar::modforms::eisenstein;
use voachar::rational::q_to_f64;
use num_traits::Signed;

fn main() {
    let f = eisenstein(2, 300);
    println!("denom={} lead={} prec={}", f.denom(), f.lead(), f.prec());
    let coeffs = f.dense_coeffs();
    let mut last: Option<(i64, f64)> = None;
    let mut worst = (0.0f64, 0i64);
    for (i, c) in coeffs.iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            let mag = q_to_f64(&c.abs());
            if let Some((pi, pm)) = last {
                let gap = (i as i64) - pi;
                let r = (mag / pm).powf(1.0 / gap as f64);
                if r > worst.0 { worst = (r, i as i64); }
            }
            last = Some((i as i64, mag));
        }
    }
    println!("worst step ratio {} at {}", worst.0, worst.1);
    println!("first coeffs: {:?}", &coeffs[..4.min(coeffs.len())].iter().map(q_to_f64).collect::<Vec<_>>());
}
