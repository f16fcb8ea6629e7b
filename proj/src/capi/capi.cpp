void dcgpulse_placeholder();
void dcgpulse_placeholder() {}
