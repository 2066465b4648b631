fn main() { println!("superalg"); }
