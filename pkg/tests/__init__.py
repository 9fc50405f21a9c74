# Test suite for the phase-shift direct measurement toolkit
