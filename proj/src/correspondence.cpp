namespace currents {}
