fn main() {
    std::process::exit(galois_heights::cli::main_entry());
}
