/**
 * Latest-wins render slot: bursts of incoming items collapse to one render of
 * the most recent, so the UI never queues behind a fast stream.
 */

export type Scheduler = (callback: () => void) => void;

export class LatestSlot<T> {
  private latest: T | null = null;
  private scheduled = false;

  constructor(
    private readonly render: (item: T) => void,
    private readonly schedule: Scheduler
  ) {}

  push(item: T): void {
    this.latest = item;
    if (this.scheduled) {
      return;
    }
    this.scheduled = true;
    this.schedule(() => {
      this.scheduled = false;
      if (this.latest !== null) {
        this.render(this.latest);
      }
    });
  }
}
