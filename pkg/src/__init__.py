"""Double octic Calabi-Yau threefolds from arrangements of eight planes."""
