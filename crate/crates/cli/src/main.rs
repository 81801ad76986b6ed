//! Binary entry point; all logic lives in the library.

fn main() {
    std::process::exit(rootclusters_cli::run());
}
