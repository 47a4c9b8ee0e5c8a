use clap::Parser;

#[derive(Parser)]
#[command(name = "specht", version, about = "Specht module summands over GF(2)")]
struct Cli {}

fn main() {
    let _cli = Cli::parse();
}
