use std::time::Instant;

fn main() {
    let limit = 2_000_000;
    let t0 = Instant::now();
    let g = codegree::spec::qian_family(3, 7, limit).unwrap();
    println!("qian(3,7) build: {:?} (order {})", t0.elapsed(), g.order());
    let t0 = Instant::now();
    let c = g.conjugacy();
    println!("qian conjugacy: {:?} (k = {}, e = {})", t0.elapsed(), c.class_count(), c.exponent);
    let t0 = Instant::now();
    let table = codegree::chartab::character_table(&g).unwrap();
    println!("qian table: {:?} (p = {}, cods = {:?})", t0.elapsed(), table.p, table.codegrees);

    let t0 = Instant::now();
    let g5 = codegree::spec::five_cycle_instance(limit).unwrap();
    println!("five-cycle build: {:?} (order {})", t0.elapsed(), g5.order());
    let t0 = Instant::now();
    let c5 = g5.conjugacy();
    println!("five-cycle conjugacy: {:?} (k = {}, e = {})", t0.elapsed(), c5.class_count(), c5.exponent);
    let t0 = Instant::now();
    let table5 = codegree::chartab::character_table(&g5).unwrap();
    println!("five-cycle table: {:?} (p = {})", t0.elapsed(), table5.p);
    println!("five-cycle cods: {:?}", table5.codegrees);
}
