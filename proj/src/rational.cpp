// rational.cpp — placeholder, implemented in a later pass.
