use ttlattice::cli;

fn main() {
    std::process::exit(cli::run());
}
