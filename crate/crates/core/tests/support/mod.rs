pub mod character_oracle;
