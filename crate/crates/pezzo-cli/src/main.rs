fn main() { println!("pezzo: under construction"); }
