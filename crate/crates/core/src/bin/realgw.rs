fn main() {
    std::process::exit(realgw::cli::main());
}
