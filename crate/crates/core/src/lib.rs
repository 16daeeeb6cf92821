pub mod ratlin;
pub mod surface;
pub mod meyer;
pub mod locsig;
pub mod cli;
pub mod fibration;
pub mod verify;
